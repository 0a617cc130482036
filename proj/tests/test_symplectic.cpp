#include <doctest.h>

#include "elnet/rng.hpp"
#include "elnet/symplectic.hpp"

using namespace elnet;

TEST_CASE("generator matrices") {
  ElGenerators g1 = el_generators(1);
  CHECK(g1.mats[0] == Mat{{0, 1}, {0, 0}});
  CHECK(g1.mats[1] == Mat{{0, 0}, {1, 0}});

  // second odd generator at n=2: upper-right block (e1+e2)(e1+e2)^T
  ElGenerators g2 = el_generators(2);
  const Mat& e3 = g2.mats[2];
  CHECK(e3.at(0, 2) == 1);
  CHECK(e3.at(0, 3) == 1);
  CHECK(e3.at(1, 2) == 1);
  CHECK(e3.at(1, 3) == 1);
  CHECK(e3.at(0, 0) == 0);
  CHECK(e3.at(2, 0) == 0);

  for (std::size_t n = 1; n <= 4; ++n) {
    ElGenerators g = el_generators(n);
    for (std::size_t i = 0; i < 2 * n; i += 2)
      for (std::size_t j = 0; j < 2 * n; j += 2)
        CHECK(lie_bracket(g.mats[i], g.mats[j]).is_zero());
  }
}

TEST_CASE("word products land in the symplectic group") {
  RatRng rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    std::size_t n = rng.index(1, 3);
    std::vector<GenLetter> letters;
    for (int l = 0; l < 6; ++l)
      letters.push_back({rng.index(1, 2 * n), rng.positive()});
    CHECK(is_symplectic(sp_of_word(make_word(n, letters))));
  }
}

TEST_CASE("rank-one word products") {
  Rat a(2), b(3), c(5);
  SpElement m = sp_of_word(make_word(1, {{1, a}, {2, b}, {1, c}}));
  CHECK(m.mat == Mat{{1 + a * b, a + c + a * b * c}, {b, 1 + b * c}});
  CHECK(sp_of_word(make_word(2, {})).mat == Mat::identity(4));
}

TEST_CASE("braid move") {
  auto [b1, a1, c1] = braid_move({1, 1, 1, 1});
  CHECK(b1 == Rat(1, 3));
  CHECK(a1 == 3);
  CHECK(c1 == Rat(1, 3));

  auto [b2, a2, c2] = braid_move({1, 2, 3, 1});
  CHECK(a2 == 10);
  CHECK(b2 == Rat(3, 5));
  CHECK(c2 == Rat(1, 5));

  Rat a(7, 2), b(1, 3), c(4);
  auto [b3, a3, c3] = braid_move({a, b, c, 0});
  CHECK(a3 == a + c);
  CHECK(b3 == b * c / (a + c));
  CHECK(c3 == a * b / (a + c));
}

TEST_CASE("staircase word") {
  CHECK(staircase_word(1) == std::vector<std::size_t>{1, 2, 1});
  CHECK(staircase_word(2) == std::vector<std::size_t>{1, 2, 1, 3, 2, 1, 4, 3, 2, 1});
}

TEST_CASE("normalize word") {
  NormalWord m = normalize_word(make_word(1, {{1, 2}, {1, 3}}));
  CHECK(m.word == std::vector<std::size_t>{1});
  CHECK(m.params == std::vector<Rat>{5});

  NormalWord s = normalize_word(make_word(2, {{3, 2}, {1, 7}}));
  CHECK(s.word == std::vector<std::size_t>{1, 3});
  CHECK(s.params == std::vector<Rat>{7, 2});

  CHECK_THROWS_AS(normalize_word(make_word(1, {{1, 0}})), NonPositiveParameter);

  // product is preserved exactly, over random positive words
  RatRng rng(29);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = rng.index(1, 2);
    std::vector<GenLetter> letters;
    std::size_t len = rng.index(1, 6);
    for (std::size_t l = 0; l < len; ++l)
      letters.push_back({rng.index(1, 2 * n), rng.positive()});
    GenWord in = make_word(n, letters);
    NormalWord nf = normalize_word(in);
    std::vector<GenLetter> out;
    for (std::size_t l = 0; l < nf.word.size(); ++l)
      out.push_back({nf.word[l], nf.params[l]});
    CHECK(sp_of_word(make_word(n, out)).mat == sp_of_word(in).mat);
    auto [perm, reduced] = perm_of_word(nf.word, 2 * n + 1);
    CHECK(reduced);
    CHECK(perm == nf.perm);
    for (const Rat& p : nf.params) CHECK(p > 0);
  }
}

TEST_CASE("hand factorization at n = 1") {
  Rat a(2), b(1, 2), c(3);
  SpElement m = sp_of_word(make_word(1, {{1, a}, {2, b}, {1, c}}));
  CHECK(m.mat == Mat{{2, 8}, {Rat(1, 2), Rat(5, 2)}});
  CHECK(factorize_top_cell(m, 1) == std::vector<Rat>{a, b, c});
}

TEST_CASE("factorization failures") {
  // parameter zero drops out of the top cell
  SpElement m = sp_of_word(make_word(1, {{1, 2}, {2, 0}, {1, 3}}));
  CHECK_THROWS_AS(factorize_top_cell(m, 1), NotInTopCell);
  // a matrix that is not a staircase product at all
  CHECK_THROWS_AS(factorize_top_cell(SpElement{1, Mat{{1, 0}, {0, -1}}}, 1), Error);
}
