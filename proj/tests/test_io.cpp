#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrspan/constructions.hpp"
#include "ehrspan/io.hpp"

#include <stdexcept>

using namespace ehrspan;
using nlohmann::json;

TEST_CASE("integers cross the 64-bit boundary as strings") {
  CHECK(int_to_json(Int(42)) == json(42));
  CHECK(int_to_json(Int(-7)) == json(-7));
  CHECK(int_to_json(Int("9223372036854775807")) == json(9223372036854775807LL));

  Int big("123456789012345678901234567890");
  json j = int_to_json(big);
  REQUIRE(j.is_string());
  CHECK(j.get<std::string>() == "123456789012345678901234567890");
  CHECK(int_from_json(j) == big);
  CHECK(int_from_json(int_to_json(-big)) == -big);

  CHECK(int_from_json(json(17)) == 17);
  CHECK(int_from_json(json("-3")) == -3);
  CHECK_THROWS_AS((void)int_from_json(json("2/3")), std::invalid_argument);
  CHECK_THROWS_AS((void)int_from_json(json(1.5)), std::invalid_argument);
  CHECK_THROWS_AS((void)int_from_json(json::array()), std::invalid_argument);
}

TEST_CASE("polytope round trip") {
  for (const LatticePolytope& p :
       {reeve_simplex(4), cube(3), segment(6), reeve_bipyramid(2)}) {
    json j = polytope_to_json(p);
    CHECK(j.at("dim") == p.dim());
    LatticePolytope back = polytope_from_json(j);
    CHECK(back.dim() == p.dim());
    CHECK(back.vertices() == p.vertices());
  }
}

TEST_CASE("polytope parsing rejects malformed input") {
  CHECK_THROWS_AS((void)polytope_from_json(json::parse(R"({"vertices": [[0],[1]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)polytope_from_json(json::parse(R"({"dim": 1})")),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)polytope_from_json(json::parse(R"({"dim": 1, "vertices": []})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)polytope_from_json(json::parse(R"({"dim": 1, "vertices": [0, 1]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)polytope_from_json(json::parse(R"({"dim": "two", "vertices": [[0],[1]]})")),
      std::invalid_argument);
}

TEST_CASE("point set round trip keeps exact rationals") {
  json j = json::parse(R"({
    "weights": [1, 1, 1, 2],
    "points": [["1", "1", "1", "1"], ["1", "1", "1", "-1"], ["3", "1/4", "1", "3/2"]]
  })");
  ProjectivePointSet gamma = point_set_from_json(j);
  CHECK(gamma.space.n == 3);
  CHECK(gamma.space.weights == std::vector<long long>{2});
  REQUIRE(gamma.points.size() == 3);
  CHECK(gamma.points[2].coords[1] == Rat(1) / 12);  // normalized by 1/3

  json back = point_set_to_json(gamma);
  ProjectivePointSet again = point_set_from_json(back);
  REQUIRE(again.points.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(again.points[i].coords == gamma.points[i].coords);
}

TEST_CASE("point set accepts bare integer coordinates") {
  json j = json::parse(R"({"weights": [1, 1, 1], "points": [[1, 0, 0], [0, 1, 0]]})");
  ProjectivePointSet gamma = point_set_from_json(j);
  CHECK(gamma.points.size() == 2);
}

TEST_CASE("point set parsing rejects malformed input") {
  // weight-one block must come first
  CHECK_THROWS_WITH(
      (void)point_set_from_json(
          json::parse(R"({"weights": [2, 1], "points": [["1", "1"]]})")),
      "weight-1 variables must come first");
  // no weight-one variable at all
  CHECK_THROWS_AS((void)point_set_from_json(
                      json::parse(R"({"weights": [2], "points": [["1"]]})")),
                  std::invalid_argument);
  // wrong coordinate count
  CHECK_THROWS_AS((void)point_set_from_json(
                      json::parse(R"({"weights": [1, 1], "points": [["1"]]})")),
                  std::invalid_argument);
  // broken rational string
  CHECK_THROWS_AS(
      (void)point_set_from_json(
          json::parse(R"({"weights": [1, 1], "points": [["1", "x"]]})")),
      std::invalid_argument);
  // missing keys
  CHECK_THROWS_AS((void)point_set_from_json(json::parse(R"({"points": []})")),
                  std::invalid_argument);
  // zero weight
  CHECK_THROWS_AS((void)point_set_from_json(
                      json::parse(R"({"weights": [1, 0], "points": [["1", "1"]]})")),
                  std::invalid_argument);
}

TEST_CASE("report serializers expose stable keys") {
  LatticePolytope p = reeve_simplex(2);

  json h = hstar_to_json(hstar_vector(p));
  CHECK(h.at("hstar") == json::array({1, 0, 1, 0}));
  CHECK(h.at("degree") == 2);
  CHECK(h.at("normalized_volume") == 2);

  json s = lattice_info_to_json(spanning_index(p));
  CHECK(s.at("index") == 2);
  CHECK(s.at("spanning") == false);
  CHECK(s.at("snf_diagonal") == json::array({1, 1, 1, 2}));

  json v = idp_to_json(is_idp(p));
  CHECK(v.at("is_idp") == false);
  CHECK(v.at("counterexample").at("k") == 2);
  CHECK(v.at("counterexample").at("point") == json::array({1, 1, 1}));

  json ok = idp_to_json(is_idp(cube(2)));
  CHECK(ok.at("is_idp") == true);
  CHECK(ok.at("counterexample").is_null());

  json r = inequality_report_to_json(check_stanley(hstar_vector(p)));
  CHECK(r.at("family") == "stanley");
  CHECK(r.at("pass") == true);
  CHECK(r.at("violations").is_array());
  CHECK(!r.contains("spanning"));
}

TEST_CASE("big coordinates survive a polytope round trip") {
  Int big("1208925819614629174706176");  // 2^80
  LatticePolytope p(1, {IntVec{Int(0)}, IntVec{big}});
  json j = polytope_to_json(p);
  CHECK(j.at("vertices")[1][0].is_string());
  LatticePolytope back = polytope_from_json(j);
  CHECK(back.vertices()[1][0] == big);
}
