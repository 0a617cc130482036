#include <doctest.h>

#include "elnet/action.hpp"
#include "elnet/rng.hpp"

using namespace elnet;

TEST_CASE("word validation") {
  CHECK_THROWS_AS(make_word(1, {{5, 1}}), IndexOutOfRange);
  CHECK_THROWS_AS(make_word(1, {{0, 1}}), IndexOutOfRange);
  CHECK_THROWS_AS(make_word(1, {{1, -1}}), NegativeParameter);
  CHECK(make_word(1, {{4, 1}}).has_extended());
  CHECK_FALSE(make_word(1, {{2, 1}}).has_extended());
}

TEST_CASE("boundary spike") {
  Network n0 = Network::empty(2);
  CHECK(adjoin_spike(n0, 1, 0).edges().empty());

  Network spiked = adjoin_spike(n0, 1, 2);
  CHECK(spiked.interior().size() == 1);
  REQUIRE(spiked.edges().size() == 1);
  CHECK(spiked.edges()[0].w == Rat(1, 2));
  CHECK(response(spiked) == Mat::zero(2, 2));

  // spike twice == one spike with added parameters
  Network base(2, {}, {{"1", "2", 3}});
  Rat a(2), b(5);
  Network twice = adjoin_spike(adjoin_spike(base, 1, a), 1, b);
  CHECK(response(twice) == response(adjoin_spike(base, 1, a + b)));
}

TEST_CASE("boundary edge") {
  Network n0 = Network::empty(2);
  Rat w(4, 3);
  CHECK(response(adjoin_edge(n0, 1, w)) == Mat{{w, -w}, {-w, w}});
  CHECK(adjoin_edge(n0, 1, 0).edges().empty());

  Rat t1(2), t2(7);
  CHECK(response(adjoin_edge(adjoin_edge(n0, 1, t1), 1, t2)) ==
        response(adjoin_edge(n0, 1, t1 + t2)));

  // k = n+1 wraps around to boundary vertex 1
  Network wrap = adjoin_edge(Network::empty(3), 3, 1);
  REQUIRE(wrap.edges().size() == 1);
  CHECK(((wrap.edges()[0].u == "3" && wrap.edges()[0].v == "1") ||
         (wrap.edges()[0].u == "1" && wrap.edges()[0].v == "3")));
}

TEST_CASE("response-level action") {
  Mat l0 = Mat::zero(2, 2);
  CHECK(act_response(l0, 1, Rat(9, 2)) == l0);
  Rat t(3);
  CHECK(act_response(l0, 2, t) == Mat{{t, -t}, {-t, t}});

  Rat w(5);
  Mat l{{w, -w}, {-w, w}};
  Mat spiked = act_response(l, 1, t);
  CHECK(spiked.at(0, 0) == w / (t * w + 1));
  Network net(2, {}, {{"1", "2", w}});
  CHECK(spiked == response(adjoin_spike(net, 1, t)));

  CHECK_THROWS_AS(act_response(l, 1, -1), NegativeParameter);
  CHECK_THROWS_AS(act_response(l, 9, 1), IndexOutOfRange);
  // unchecked variant hits the denominator guard
  CHECK_THROWS_AS(act_response_unchecked(l, 1, Rat(-1, 5)), SingularDenominator);
}

TEST_CASE("word action on responses and networks") {
  Mat l0 = Mat::zero(3, 3);
  CHECK(act_word(l0, make_word(2, {})) == l0);

  // star-triangle at the word level
  RatRng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Rat a = rng.positive(), b = rng.positive(), c = rng.positive();
    Rat d = a + c + a * b * c;
    Mat lhs = act_word(l0, make_word(2, {{3, a}, {4, b}, {3, c}}));
    Mat rhs = act_word(l0, make_word(2, {{4, b * c / d}, {3, d}, {4, a * b / d}}));
    CHECK(lhs == rhs);
  }

  // absorbing an odd letter into an adjacent even one over the zero response
  for (std::size_t odd : {1ul, 3ul}) {
    Rat a(3), b(7, 2);
    Mat lhs = act_word(l0, make_word(2, {{odd, a}, {2, b}}));
    Mat rhs = act_word(l0, make_word(2, {{2, b / (a * b + 1)}}));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("semigroup relations on arbitrary response matrices") {
  RatRng rng(13);
  for (int trial = 0; trial < 8; ++trial) {
    std::size_t bc = rng.index(3, 5);
    Mat l = response(rng.network(bc, 4, rng.index(0, 3)));
    std::size_t n = bc - 1;
    Rat a = rng.positive(), b = rng.positive(), c = rng.positive();

    for (std::size_t i = 1; i <= 2 * n + 2; ++i)
      CHECK(act_response(act_response(l, i, a), i, b) == act_response(l, i, a + b));

    for (std::size_t i = 1; i <= 2 * n + 2; ++i)
      for (std::size_t j = i + 2; j <= 2 * n + 2; ++j) {
        if (i == 1 && j == 2 * n + 2) continue;  // cyclically adjacent
        CHECK(act_response(act_response(l, i, a), j, b) ==
              act_response(act_response(l, j, b), i, a));
      }

    for (std::size_t i = 1; i + 1 <= 2 * n + 2; ++i) {
      std::size_t j = i + 1;
      Rat d = a + c + a * b * c;
      Mat lhs = act_word(l, make_word(n, {{i, a}, {j, b}, {i, c}}));
      Mat rhs = act_word(l, make_word(n, {{j, b * c / d}, {i, d}, {j, a * b / d}}));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("action preserves symmetry and row sums") {
  RatRng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t bc = rng.index(2, 5);
    Mat l = response(rng.network(bc, 4, rng.index(0, 3)));
    std::size_t i = rng.index(1, 2 * bc);
    Mat out = act_response(l, i, rng.positive());
    CHECK(out == out.transpose());
    for (std::size_t p = 0; p < out.rows(); ++p) {
      Rat sum = 0;
      for (std::size_t q = 0; q < out.cols(); ++q) sum += out.at(p, q);
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("extended wrap-around indices act on networks too") {
  RatRng rng(19);
  for (int trial = 0; trial < 5; ++trial) {
    std::size_t bc = rng.index(2, 4);
    Network net = rng.network(bc, 3, 1);
    Mat l = response(net);
    for (std::size_t i : {2 * bc - 1, 2 * bc}) {
      Rat t = rng.positive();
      GenWord w = make_word(bc - 1, {{i, t}});
      CHECK(w.has_extended());
      CHECK(response(act_word(net, w)) == act_response(l, i, t));
    }
  }
}
