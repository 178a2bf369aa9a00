#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "opsysdual/band.hpp"
#include "opsysdual/graph.hpp"
#include "support/oracles.hpp"

using osd::EliminationOrder;
using osd::ToleranceRelation;

namespace {

ToleranceRelation path3() { return ToleranceRelation(3, {{0, 1}, {1, 2}}); }

ToleranceRelation c4() {
  return ToleranceRelation(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

}  // namespace

TEST_CASE("tolerance relations normalize and validate their edges") {
  ToleranceRelation r(4, {{2, 0}, {1, 2}, {1, 1}});
  CHECK(r.vertex_count() == 4);
  CHECK(r.edge_count() == 2);  // (1,1) is implicit and dropped
  CHECK(r.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
  CHECK(r.related(0, 2));
  CHECK(r.related(2, 0));
  CHECK(r.related(3, 3));  // reflexive
  CHECK(!r.related(0, 3));
  CHECK(!r.adjacent(3, 3));
  CHECK(r.neighbors(2) == std::vector<int>{0, 1});
  CHECK(r.neighbors(3).empty());

  CHECK_THROWS_AS(ToleranceRelation(3, {{0, 3}}), osd::IndexOutOfRange);
  CHECK_THROWS_AS(ToleranceRelation(2, {{-1, 0}}), osd::IndexOutOfRange);
}

TEST_CASE("complete and edgeless factories") {
  CHECK(ToleranceRelation::complete(4).edge_count() == 6);
  CHECK(ToleranceRelation::edgeless(4).edge_count() == 0);
  CHECK(ToleranceRelation::complete(1).edge_count() == 0);
}

TEST_CASE("maximum cardinality search yields a perfect elimination ordering "
          "exactly on chordal graphs") {
  EliminationOrder order = osd::mcs_order(path3());
  CHECK(order.order.size() == 3);
  CHECK(osd::verify_peo(path3(), order));
  CHECK(osd::is_chordal(path3()));

  CHECK(!osd::verify_peo(c4(), osd::mcs_order(c4())));
  CHECK(!osd::is_chordal(c4()));

  // C4 plus one chord is chordal again.
  ToleranceRelation chorded(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  CHECK(osd::is_chordal(chorded));

  CHECK(osd::is_chordal(ToleranceRelation::complete(5)));
  CHECK(osd::is_chordal(ToleranceRelation::edgeless(5)));

  CHECK_THROWS_AS(osd::verify_peo(path3(), EliminationOrder{{0, 1}}),
                  osd::InvalidInput);
  CHECK_THROWS_AS(osd::verify_peo(path3(), EliminationOrder{{0, 1, 1}}),
                  osd::InvalidInput);
}

TEST_CASE("mcs breaks weight ties toward the lowest index deterministically") {
  for (int trial = 0; trial < 3; ++trial) {
    CHECK(osd::mcs_order(path3()).order == osd::mcs_order(path3()).order);
  }
  // On an edgeless graph every weight is always zero, so the visit order is
  // 0,1,2,... and the elimination order its reverse.
  CHECK(osd::mcs_order(ToleranceRelation::edgeless(4)).order ==
        std::vector<int>{3, 2, 1, 0});
}

TEST_CASE("chordality agrees with the chordless-cycle definition on every "
          "graph with up to six vertices") {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
      ToleranceRelation r = testsupport::graph_from_mask(n, mask);
      if (osd::is_chordal(r) != testsupport::oracle_chordal(r)) {
        CAPTURE(n);
        CAPTURE(mask);
        REQUIRE(osd::is_chordal(r) == testsupport::oracle_chordal(r));
      }
    }
  }
}

TEST_CASE("chordality agrees with the chordless-cycle definition on sampled "
          "seven-vertex graphs") {
  std::mt19937_64 rng(20260822);
  for (int trial = 0; trial < 20000; ++trial) {
    std::uniform_real_distribution<double> density(0.1, 0.9);
    ToleranceRelation r = testsupport::random_graph(rng, 7, density(rng));
    REQUIRE(osd::is_chordal(r) == testsupport::oracle_chordal(r));
  }
}

TEST_CASE("maximal cliques of chordal graphs match subset enumeration") {
  CHECK(osd::maximal_cliques(path3()) ==
        std::vector<std::vector<int>>{{0, 1}, {1, 2}});
  CHECK(osd::maximal_cliques(ToleranceRelation::complete(4)) ==
        std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK(osd::maximal_cliques(ToleranceRelation::edgeless(3)) ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK_THROWS_AS(osd::maximal_cliques(c4()), osd::NotChordal);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    ToleranceRelation r = testsupport::random_chordal(rng, 2 + trial % 6, 0.4);
    CHECK(osd::maximal_cliques(r) == testsupport::oracle_maximal_cliques(r));
  }
}

TEST_CASE("components, diameter and the equivalence test") {
  ToleranceRelation two(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(osd::connected_components(two) ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}});
  CHECK(!osd::diameter(two).has_value());
  CHECK(osd::is_equivalence(two));  // K2 together with K3

  CHECK(osd::diameter(path3()) == 2);
  CHECK(osd::diameter(ToleranceRelation::complete(4)) == 1);
  CHECK(osd::diameter(ToleranceRelation(1, {})) == 0);
  CHECK(!osd::is_equivalence(path3()));
  CHECK(osd::is_equivalence(ToleranceRelation::complete(4)));
  CHECK(osd::is_equivalence(ToleranceRelation::edgeless(3)));
}

TEST_CASE("ampliation inflates every relation pair to an m-block") {
  ToleranceRelation r = path3();
  ToleranceRelation a = osd::ampliate(r, 2);
  CHECK(a.vertex_count() == 6);
  // (x,i) lands at x*2+i; related blocks are fully wired.
  CHECK(a.related(0, 1));  // (0,0)-(0,1), diagonal block
  CHECK(a.adjacent(0, 3)); // (0,0)-(1,1)
  CHECK(a.adjacent(1, 2)); // (0,1)-(1,0)
  CHECK(!a.related(0, 4)); // (0,0)-(2,0) not related in the base
  CHECK(osd::is_chordal(a));
  CHECK(osd::maximal_cliques(a).size() == osd::maximal_cliques(r).size());

  CHECK_THROWS_AS(osd::ampliate(r, 0), osd::InvalidInput);
}

TEST_CASE("ampliation preserves the maximal clique count on random chordal "
          "graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    ToleranceRelation r = testsupport::random_chordal(rng, 2 + trial % 4, 0.5);
    ToleranceRelation a = osd::ampliate(r, 2);
    REQUIRE(osd::is_chordal(a));
    CHECK(osd::maximal_cliques(a).size() == osd::maximal_cliques(r).size());
  }
}
