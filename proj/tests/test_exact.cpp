#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elnet/linalg.hpp"
#include "elnet/network.hpp"
#include "elnet/rng.hpp"
#include "elnet/symplectic.hpp"

using namespace elnet;

TEST_CASE("rational strings") {
  CHECK(to_string(Rat(3, 4)) == "3/4");
  CHECK(to_string(Rat(5)) == "5");
  CHECK(to_string(Rat(-7, 2)) == "-7/2");
  CHECK(rat_from_string("2/4") == Rat(1, 2));
  CHECK(rat_from_string("-3") == Rat(-3));
  CHECK_THROWS_AS(rat_from_string("abc"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rat_from_string(""), ParseError);
}

TEST_CASE("matrix basics") {
  Mat a{{1, 2}, {3, 4}};
  CHECK(a.transpose() == Mat{{1, 3}, {2, 4}});
  CHECK(Mat::identity(2) * a == a);
  CHECK(a + Mat::zero(2, 2) == a);
  CHECK(Rat(2) * a == Mat{{2, 4}, {6, 8}});
  CHECK(Mat::identity(3).is_identity());
  CHECK(Mat::zero(2, 3).is_zero());
}

TEST_CASE("lie bracket") {
  Mat e12{{0, 1}, {0, 0}}, e21{{0, 0}, {1, 0}};
  CHECK(lie_bracket(e12, e21) == Mat{{1, 0}, {0, -1}});

  Mat a{{1, 2}, {3, 4}};
  CHECK(lie_bracket(a, a).is_zero());

  // the 2x2 pair satisfying the electrical relation [f,[f,e]] = -2f
  Mat e{{1, 1}, {0, 1}}, f{{0, 0}, {1, 0}};
  CHECK(lie_bracket(f, lie_bracket(f, e)) == Rat(-2) * f);

  CHECK_THROWS_AS(lie_bracket(a, Mat::identity(3)), DimensionMismatch);
}

TEST_CASE("jacobi identity on random matrices") {
  RatRng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Mat a(3, 3), b(3, 3), c(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        a.at(i, j) = rng.any();
        b.at(i, j) = rng.any();
        c.at(i, j) = rng.any();
      }
    Mat sum = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) +
              lie_bracket(c, lie_bracket(a, b));
    CHECK(sum.is_zero());
  }
}

TEST_CASE("schur complement") {
  Mat k{{1, 2}, {3, 4}};
  CHECK(schur_complement(k, {}) == k);

  // star with unit legs, center last
  Network star(3, {"v"},
               {{"1", "v", 1}, {"2", "v", 1}, {"3", "v", 1}});
  Mat s = schur_complement(kirchhoff(star), {3});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(s.at(i, j) == (i == j ? Rat(2, 3) : Rat(-1, 3)));

  Network path(2, {"v"}, {{"1", "v", 2}, {"v", "2", 2}});
  CHECK(schur_complement(kirchhoff(path), {2}) == Mat{{1, -1}, {-1, 1}});

  // singular interior block
  Mat z(2, 2);
  CHECK_THROWS_AS(schur_complement(z, {1}), SingularInterior);
}

TEST_CASE("schur complement preserves symmetry and row sums") {
  RatRng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Network net = rng.network(rng.index(2, 4), 4, rng.index(0, 3));
    Mat l = response(net);
    CHECK(l == l.transpose());
    for (std::size_t i = 0; i < l.rows(); ++i) {
      Rat sum = 0;
      for (std::size_t j = 0; j < l.cols(); ++j) sum += l.at(i, j);
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("exp of nilpotent matrices") {
  Mat e12{{0, 1}, {0, 0}};
  CHECK(exp_nilpotent(e12, Rat(5, 3)) == Mat{{1, Rat(5, 3)}, {0, 1}});
  CHECK(exp_nilpotent(Mat::zero(3, 3), 9) == Mat::identity(3));

  ElGenerators g = el_generators(2);
  CHECK((g.mats[0] * g.mats[0]).is_zero());
  CHECK(exp_nilpotent(g.mats[0], 1) == Mat::identity(4) + g.mats[0]);

  CHECK_THROWS_AS(exp_nilpotent(Mat::identity(2), 1), NotNilpotent);

  RatRng rng(3);
  Mat n{{0, 2, 5}, {0, 0, -1}, {0, 0, 0}};
  for (int trial = 0; trial < 5; ++trial) {
    Rat s = rng.any(), t = rng.any();
    CHECK(exp_nilpotent(n, s) * exp_nilpotent(n, t) == exp_nilpotent(n, s + t));
  }
}

TEST_CASE("scaled exponentials") {
  Mat u{{1, 1}, {0, 1}};
  Rat t(7, 2);
  CHECK(scaled_exp(u, t) == ScaledMat{t, Mat{{1, t}, {0, 1}}});

  Mat strict{{0, 3}, {0, 0}};
  CHECK(scaled_exp(strict, t).exponent == 0);
  CHECK(scaled_exp(strict, t).body == exp_nilpotent(strict, t));

  Mat eg2_e{{1, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  ScaledMat s = scaled_exp(eg2_e, 1);
  CHECK(s.exponent == 1);
  CHECK(s.body == exp_nilpotent(eg2_e - Mat::identity(4), 1));

  CHECK_THROWS_AS(scaled_exp(Mat{{1, 0}, {0, 2}}, 1), UnsupportedMatrix);

  CHECK(scaled_exp(u, Rat(1, 3)) * scaled_exp(u, Rat(2, 3)) == scaled_exp(u, 1));
}

TEST_CASE("span dimension") {
  Mat e11{{1, 0}, {0, 0}}, e22{{0, 0}, {0, 1}};
  CHECK(span_dim({e11, e22, e11 + e22}) == 2);
  CHECK(span_dim({}) == 0);
}

TEST_CASE("row space") {
  RowSpace rs;
  CHECK(rs.insert({1, 2, 3}));
  CHECK(rs.insert({0, 1, 1}));
  CHECK_FALSE(rs.insert({1, 3, 4}));
  CHECK(rs.dim() == 2);
  CHECK(rs.contains({2, 5, 7}));
  CHECK_FALSE(rs.contains({0, 0, 1}));
}
