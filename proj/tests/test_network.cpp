#include <doctest.h>

#include <set>

#include "elnet/network.hpp"
#include "elnet/rng.hpp"

using namespace elnet;

TEST_CASE("network validation") {
  CHECK_THROWS_AS(Network(2, {}, {{"1", "2", 0}}), ValidationError);
  CHECK_THROWS_AS(Network(2, {}, {{"1", "9", 1}}), ValidationError);
  CHECK_THROWS_AS(Network(2, {"v", "v"}, {}), ValidationError);
  CHECK_THROWS_AS(Network(3, {"2"}, {}), ValidationError);
  CHECK_THROWS_AS(Network(2, {""}, {}), ValidationError);

  Network n(2, {"v"}, {{"1", "v", 1}, {"v", "2", 2}});
  CHECK(n.is_boundary("1"));
  CHECK_FALSE(n.is_boundary("v"));
  CHECK(n.vertex_index("v") == 2);
  CHECK(n.boundary_name(2) == "2");
  CHECK(n.incident_edges("v") == std::vector<std::size_t>{0, 1});
  CHECK(n.fresh_interior_id("v") != "v");
}

TEST_CASE("kirchhoff matrix") {
  Network single(2, {}, {{"1", "2", Rat(7, 3)}});
  CHECK(kirchhoff(single) == Mat{{Rat(7, 3), Rat(-7, 3)}, {Rat(-7, 3), Rat(7, 3)}});

  CHECK(kirchhoff(Network::empty(3)) == Mat::zero(3, 3));

  Network star(3, {"v"}, {{"1", "v", 2}, {"2", "v", 3}, {"3", "v", 5}});
  Mat k = kirchhoff(star);
  CHECK(k.at(3, 0) == -2);
  CHECK(k.at(3, 1) == -3);
  CHECK(k.at(3, 2) == -5);
  CHECK(k.at(3, 3) == 10);
}

TEST_CASE("response matrix") {
  CHECK(response(Network::empty(4)) == Mat::zero(4, 4));

  Network star(3, {"v"}, {{"1", "v", 1}, {"2", "v", 1}, {"3", "v", 1}});
  Mat l = response(star);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(l.at(i, j) == (i == j ? Rat(2, 3) : Rat(-1, 3)));

  Rat a(3), b(5), s = a * b / (a + b);
  Network path(2, {"v"}, {{"1", "v", a}, {"v", "2", b}});
  CHECK(response(path) == Mat{{s, -s}, {-s, s}});

  // isolated interior vertex: no path to the boundary
  CHECK_THROWS_AS(response(Network(2, {"v"}, {})), SingularInterior);
}

TEST_CASE("local moves, worked examples") {
  Network y(3, {"v"}, {{"1", "v", 3}, {"2", "v", 3}, {"3", "v", 3}});
  Network tri = apply_local_move(y, {LocalMove::Kind::y_to_delta, "v", {}});
  CHECK(tri.interior().empty());
  CHECK(tri.edges().size() == 3);
  for (const auto& e : tri.edges()) CHECK(e.w == 1);
  CHECK(response(tri) == response(y));

  Network par(2, {}, {{"1", "2", 3}, {"1", "2", 4}});
  Network merged = apply_local_move(par, {LocalMove::Kind::parallel, "", {0, 1}});
  CHECK(merged.edges().size() == 1);
  CHECK(merged.edges()[0].w == 7);

  Network ser(2, {"v"}, {{"1", "v", 2}, {"v", "2", 2}});
  Network fused = apply_local_move(ser, {LocalMove::Kind::series, "v", {}});
  CHECK(fused.edges().size() == 1);
  CHECK(fused.edges()[0].w == 1);
  CHECK(fused.interior().empty());

  Network looped(2, {}, {{"1", "2", 1}, {"2", "2", 5}});
  Network unlooped = apply_local_move(looped, {LocalMove::Kind::loop, "", {1}});
  CHECK(unlooped.edges().size() == 1);

  Network pend(2, {"p"}, {{"1", "2", 1}, {"1", "p", 4}});
  Network removed = apply_local_move(pend, {LocalMove::Kind::pendant, "p", {}});
  CHECK(removed.interior().empty());
  CHECK(response(removed) == response(pend));
}

TEST_CASE("local move applicability diagnoses") {
  Network n(2, {"v"}, {{"1", "v", 1}, {"v", "2", 1}, {"1", "2", 1}});
  CHECK_THROWS_AS(apply_local_move(n, {LocalMove::Kind::series, "1", {}}),
                  MoveNotApplicable);
  CHECK_THROWS_AS(apply_local_move(n, {LocalMove::Kind::pendant, "v", {}}),
                  MoveNotApplicable);
  CHECK_THROWS_AS(apply_local_move(n, {LocalMove::Kind::parallel, "", {0, 1}}),
                  MoveNotApplicable);
  CHECK_THROWS_AS(apply_local_move(n, {LocalMove::Kind::loop, "", {0}}),
                  MoveNotApplicable);
  CHECK_THROWS_AS(apply_local_move(n, {LocalMove::Kind::delta_to_y, "", {0, 1, 1}}),
                  MoveNotApplicable);
  CHECK_THROWS_AS(apply_local_move(n, {LocalMove::Kind::parallel, "", {0, 9}}),
                  MoveNotApplicable);
  CHECK_THROWS_AS(apply_local_move(n, {LocalMove::Kind::y_to_delta, "v", {}}),
                  MoveNotApplicable);  // degree 2, not 3

  CHECK(move_kind_from_string("series") == LocalMove::Kind::series);
  CHECK_THROWS_AS(move_kind_from_string("star"), ValidationError);
}

TEST_CASE("delta-y round trip on a triangle inside a network") {
  Network n(3, {"y"},
            {{"1", "y", 2}, {"2", "y", 3}, {"3", "y", 5}, {"1", "2", 1}});
  Network tri = apply_local_move(n, {LocalMove::Kind::y_to_delta, "y", {}});
  CHECK(response(tri) == response(n));
  std::size_t m = tri.edges().size();
  Network back = apply_local_move(tri, {LocalMove::Kind::delta_to_y, "", {m - 3, m - 2, m - 1}});
  CHECK(response(back) == response(n));
  // leg weights return exactly
  std::multiset<Rat> weights;
  for (const auto& e : back.edges())
    if (e.u == "y" || e.v == "y") weights.insert(e.w);
  CHECK(weights == std::multiset<Rat>{2, 3, 5});
}
