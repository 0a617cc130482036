#include <doctest.h>

#include "elnet/json_io.hpp"
#include "elnet/rng.hpp"

using namespace elnet;
using nlohmann::json;

TEST_CASE("network JSON round trip") {
  json j = json::parse(R"({"boundary":2, "interior":[], "edges":[{"u":"1","v":"2","w":"1"}]})");
  Network n = network_from_json(j);
  CHECK(n.boundary_count() == 2);
  CHECK(n.interior().empty());
  REQUIRE(n.edges().size() == 1);
  CHECK(n.edges()[0].w == 1);

  RatRng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    Network net = rng.network(rng.index(2, 5), 4, 2);
    Network back = network_from_json(network_to_json(net));
    CHECK(back.boundary_count() == net.boundary_count());
    CHECK(back.interior() == net.interior());
    CHECK(back.edges().size() == net.edges().size());
    CHECK(response(back) == response(net));
  }
}

TEST_CASE("network JSON validation") {
  json zero = json::parse(R"({"boundary":2, "interior":[], "edges":[{"u":"1","v":"2","w":"0"}]})");
  CHECK_THROWS_AS(network_from_json(zero), ValidationError);

  json badend = json::parse(R"({"boundary":2, "interior":[], "edges":[{"u":"1","v":"9","w":"1"}]})");
  CHECK_THROWS_AS(network_from_json(badend), ValidationError);

  CHECK_THROWS_AS(network_from_json(json::parse("{}")), ParseError);
  json badedge = json::parse(R"({"boundary":2, "interior":[], "edges":[{"u":"1"}]})");
  CHECK_THROWS_AS(network_from_json(badedge), ParseError);
  json badweight = json::parse(R"({"boundary":2, "interior":[], "edges":[{"u":"1","v":"2","w":"x"}]})");
  CHECK_THROWS_AS(network_from_json(badweight), ParseError);
}

TEST_CASE("matrix JSON round trip") {
  Mat m{{Rat(1, 2), -3}, {0, Rat(7, 5)}};
  CHECK(mat_from_json(mat_to_json(m)) == m);

  CHECK_THROWS_AS(mat_from_json(json::parse("[]")), ParseError);
  CHECK_THROWS_AS(mat_from_json(json::parse(R"({"rows":2,"cols":2,"data":[["1","2"]]})")),
                  ParseError);
  CHECK_THROWS_AS(mat_from_json(json::parse(R"({"rows":1,"cols":2,"data":[["1"]]})")),
                  ParseError);
}
