#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "opsysdual/json_io.hpp"
#include "support/oracles.hpp"

using osd::Complex;
using osd::Json;
using osd::PartialHermitianMatrix;
using osd::ToleranceRelation;

TEST_CASE("graphs round-trip through json") {
  ToleranceRelation r(4, {{0, 1}, {1, 2}, {0, 3}});
  CHECK(osd::graph_from_json(osd::graph_to_json(r)) == r);

  Json j = Json::parse(R"({"n": 3, "edges": [[2,1],[1,1],[0,2]]})");
  ToleranceRelation parsed = osd::graph_from_json(j);
  CHECK(parsed.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});

  CHECK(osd::graph_from_json(Json::parse(R"({"n": 2, "edges": []})"))
            .edge_count() == 0);
}

TEST_CASE("malformed graphs are rejected") {
  auto reject = [](const char* text) {
    CHECK_THROWS_AS(osd::graph_from_json(Json::parse(text)),
                    osd::InvalidInput);
  };
  reject(R"({"edges": []})");                      // n missing
  reject(R"({"n": 0, "edges": []})");              // empty vertex set
  reject(R"({"n": 2.5, "edges": []})");            // fractional n
  reject(R"({"n": 2})");                           // edges missing
  reject(R"({"n": 2, "edges": [[0]]})");           // not a pair
  reject(R"({"n": 2, "edges": [[0,1,1]]})");       // not a pair
  reject(R"({"n": 2, "edges": [[0,2]]})");         // index out of range
  reject(R"({"n": 2, "edges": [[0,-1]]})");        // negative index
  reject(R"({"n": 3, "edges": [[0,1],[1,0]]})");   // duplicate edge
  reject(R"({"n": 2, "edges": 7})");               // wrong type
}

TEST_CASE("pattern matrices round-trip with their graph attached") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 5;
    ToleranceRelation r = testsupport::random_graph(rng, n, 0.5);
    PartialHermitianMatrix x =
        project_to_pattern(testsupport::random_hermitian(rng, n), r);

    Json j = osd::partial_to_json(x);
    REQUIRE(j.contains("graph"));
    PartialHermitianMatrix back = osd::partial_from_json(j);
    CHECK(back.pattern() == x.pattern());
    CHECK((back.values() - x.values()).hs_norm() == 0.0);
  }
}

TEST_CASE("the pattern is inferred from off-diagonal entries when no graph "
          "is given") {
  Json j = Json::parse(R"({
    "n": 3,
    "entries": [
      {"i": 0, "j": 0, "re": 1.0},
      {"i": 1, "j": 1, "re": 1.0},
      {"i": 2, "j": 2, "re": 1.0},
      {"i": 0, "j": 1, "re": 0.5, "im": -0.25}
    ]
  })");
  PartialHermitianMatrix x = osd::partial_from_json(j);
  CHECK(x.pattern() == ToleranceRelation(3, {{0, 1}}));
  CHECK(x.entry(0, 1) == Complex(0.5, -0.25));
  CHECK(x.entry(1, 0) == Complex(0.5, 0.25));
  CHECK(x.entry(1, 2) == Complex(0.0, 0.0));
}

TEST_CASE("an explicit graph must match the entries exactly") {
  const char* base = R"({
    "n": 3,
    "graph": {"n": 3, "edges": [[0,1],[1,2]]},
    "entries": [
      {"i": 0, "j": 0, "re": 1.0},
      {"i": 1, "j": 1, "re": 1.0},
      {"i": 2, "j": 2, "re": 1.0},
      {"i": 0, "j": 1, "re": 0.5},
      {"i": 1, "j": 2, "re": 0.5}
    ]
  })";
  CHECK_NOTHROW(osd::partial_from_json(Json::parse(base)));

  // Dropping an edge entry leaves the graph claiming more than the data.
  Json missing = Json::parse(base);
  missing["entries"].erase(4);
  CHECK_THROWS_AS(osd::partial_from_json(missing), osd::InvalidInput);

  // An entry outside the declared graph is just as bad.
  Json extra = Json::parse(base);
  extra["graph"]["edges"] = Json::parse("[[0,1]]");
  CHECK_THROWS_AS(osd::partial_from_json(extra), osd::InvalidInput);
}

TEST_CASE("malformed pattern matrices are rejected") {
  auto reject = [](const char* text) {
    CHECK_THROWS_AS(osd::partial_from_json(Json::parse(text)),
                    osd::InvalidInput);
  };
  // Lower-triangle entry.
  reject(R"({"n":2,"entries":[{"i":0,"j":0,"re":1},{"i":1,"j":1,"re":1},
            {"i":1,"j":0,"re":0.5}]})");
  // Duplicate entry.
  reject(R"({"n":2,"entries":[{"i":0,"j":0,"re":1},{"i":0,"j":0,"re":2},
            {"i":1,"j":1,"re":1}]})");
  // Missing diagonal coverage.
  reject(R"({"n":2,"entries":[{"i":0,"j":0,"re":1}]})");
  // Imaginary diagonal.
  reject(R"({"n":1,"entries":[{"i":0,"j":0,"re":1,"im":0.5}]})");
  // Index out of range.
  reject(R"({"n":2,"entries":[{"i":0,"j":0,"re":1},{"i":1,"j":1,"re":1},
            {"i":1,"j":2,"re":1}]})");
  // Non-numeric payload.
  reject(R"({"n":1,"entries":[{"i":0,"j":0,"re":"one"}]})");
}

TEST_CASE("omitted re and im components default to zero") {
  // An entry object with only indices still marks the position as
  // specified -- with value zero -- which matters for pattern inference.
  PartialHermitianMatrix x = osd::partial_from_json(Json::parse(
      R"({"n":2,"entries":[{"i":0,"j":0},{"i":1,"j":1,"re":2},
          {"i":0,"j":1,"im":0.5}]})"));
  CHECK(x.entry(0, 0) == Complex(0.0, 0.0));
  CHECK(x.entry(1, 1) == Complex(2.0, 0.0));
  CHECK(x.entry(0, 1) == Complex(0.0, 0.5));
  CHECK(x.pattern() == ToleranceRelation(2, {{0, 1}}));
}

TEST_CASE("dense hermitian output reads back as a fully specified matrix") {
  std::mt19937_64 rng(4);
  osd::HermitianMatrix a = testsupport::random_psd(rng, 4);
  Json j = osd::hermitian_to_json(a);
  j["graph"] = osd::graph_to_json(ToleranceRelation::complete(4));
  PartialHermitianMatrix back = osd::partial_from_json(j);
  CHECK(back.pattern() == ToleranceRelation::complete(4));
  CHECK((back.values() - a).hs_norm() == 0.0);
}

TEST_CASE("vectors accept scalars, pairs and objects") {
  Json j = Json::parse(R"({"v": [1.0, [0.0, 1.0], {"re": 2.0, "im": 0.5},
                               {"re": -1.0}, 3]})");
  std::vector<Complex> v = osd::vector_from_json(j);
  REQUIRE(v.size() == 5);
  CHECK(v[0] == Complex(1.0, 0.0));
  CHECK(v[1] == Complex(0.0, 1.0));
  CHECK(v[2] == Complex(2.0, 0.5));
  CHECK(v[3] == Complex(-1.0, 0.0));
  CHECK(v[4] == Complex(3.0, 0.0));

  CHECK(osd::vector_from_json(osd::vector_to_json(v)) == v);

  CHECK_THROWS_AS(osd::vector_from_json(Json::parse(R"({"v": []})")),
                  osd::InvalidInput);
  CHECK_THROWS_AS(osd::vector_from_json(Json::parse(R"({"v": [[1,2,3]]})")),
                  osd::InvalidInput);
  CHECK_THROWS_AS(osd::vector_from_json(Json::parse(R"({"v": ["x"]})")),
                  osd::InvalidInput);
  CHECK_THROWS_AS(osd::vector_from_json(Json::parse(R"({"w": [1]})")),
                  osd::InvalidInput);
}

TEST_CASE("json serialization is byte-stable") {
  std::mt19937_64 rng(21);
  ToleranceRelation r = testsupport::random_chordal(rng, 5, 0.5);
  PartialHermitianMatrix x =
      project_to_pattern(testsupport::random_psd(rng, 5), r);
  const std::string once = osd::partial_to_json(x).dump(2);
  const std::string twice =
      osd::partial_to_json(osd::partial_from_json(Json::parse(once))).dump(2);
  CHECK(once == twice);
}
