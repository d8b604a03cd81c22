#include <doctest.h>

#include <algorithm>

#include "intershift/oracle.hpp"
#include "support.hpp"

using namespace intershift;
using namespace intershift::oracle;
using intershift::testing::centers;
using intershift::testing::Gen;

TEST_CASE("oracle_gathering examples") {
  auto r = oracle_gathering(centers({0, 2, 4}));
  CHECK(r.cost == 3.0);
  CHECK(r.point == 1.5);
  r = oracle_gathering(centers({7}));
  CHECK(r.cost == 0.0);
  CHECK(r.point == 6.5);
  r = oracle_gathering(Collection({{0, 1, 1}, {10, 1, 3}}));
  CHECK(r.cost == 9.0);
  CHECK(r.point == 9.5);
}

TEST_CASE("oracle_gathering is never below sampled costs' envelope") {
  Gen gen(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = gen.collection(gen.size(1, 30), 10, 4, true);
    const auto r = oracle_gathering(c);
    for (int s = 0; s < 500; ++s) {
      CHECK(total_moving_distance(c, gen.real(-20, 20)) >= r.cost * (1 - 1e-12));
    }
  }
}

TEST_CASE("oracle_kclique_full examples") {
  CHECK(oracle_kclique_full(centers({0, 3, 6, 9, 12}), 2) == 2.0);
  CHECK(oracle_kclique_full(centers({0, 3, 6, 9, 12}), 1) == 0.0);
  CHECK(oracle_kclique_full(centers({0, 2, 4}), 3) == 3.0);
  const auto w = oracle_kclique_windows(centers({0, 3, 6, 9, 12}), 2);
  CHECK(w.window_start == 1);
  CHECK(w.cost == 2.0);
}

TEST_CASE("check_property examples") {
  CHECK(check_property(centers({0, 2, 4}), GraphProperty::kEdgeless).holds);

  auto r = check_property(centers({0, 0.5, 1}), GraphProperty::kAcyclic);
  CHECK_FALSE(r.holds);
  CHECK(r.witness_kind == "cycle");
  auto cycle = r.witness;
  std::sort(cycle.begin(), cycle.end());
  CHECK(cycle == std::vector<std::size_t>{0, 1, 2});

  const auto path = centers({0, 0.9, 1.8, 2.7, 3.6});
  CHECK(check_property(path, GraphProperty::kKConnected, 1).holds);
  r = check_property(path, GraphProperty::kKConnected, 2);
  CHECK_FALSE(r.holds);
  CHECK(r.witness_kind == "separator");
  CHECK(r.witness.size() == 1);
  CHECK(check_property(path, GraphProperty::kAcyclic).holds);

  r = check_property(centers({0, 0.2, 0.4, 5}), GraphProperty::kNoKClique, 3);
  CHECK_FALSE(r.holds);
  CHECK(r.witness == std::vector<std::size_t>{0, 1, 2});
  CHECK(check_property(centers({0, 0.2, 0.4, 5}), GraphProperty::kHasKClique, 3).holds);

  r = check_property(centers({0, 0.5, 2}), GraphProperty::kComplete);
  CHECK_FALSE(r.holds);
  CHECK(r.witness == std::vector<std::size_t>{0, 2});

  // Tolerance widens every interval's reach.
  CHECK_FALSE(check_property(centers({0, 1.0000001}), GraphProperty::kEdgeless, 0, 1e-6).holds);
  CHECK(check_property(centers({0, 1.00001}), GraphProperty::kEdgeless, 0, 1e-6).holds);
}

TEST_CASE("complete iff some point is shared") {
  Gen gen(43);
  for (int trial = 0; trial < 400; ++trial) {
    const auto c = gen.collection(gen.size(1, 8), 2, 1, true);
    double lo = -1e300, hi = 1e300;
    for (const auto& it : c.items()) {
      lo = std::max(lo, it.left());
      hi = std::min(hi, it.right());
    }
    CHECK(check_property(c, GraphProperty::kComplete).holds == (lo <= hi));
  }
}

TEST_CASE("sweep clique number matches the consecutive-gap rule") {
  Gen gen(44);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = gen.size(1, 30);
    const auto c = sort_by_center(gen.unit_collection(n, 6));
    const auto k = gen.size(1, n);
    bool gap_rule = false;
    for (std::size_t i = 0; i + k - 1 < n; ++i) gap_rule |= c[i + k - 1].center - c[i].center <= 1.0;
    CHECK((max_clique_sweep(c).size >= k) == gap_rule);
  }
}

TEST_CASE("exhaustive connectivity agrees with the index-gap rule") {
  Gen gen(45);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = gen.size(2, 10);
    const auto c = sort_by_center(gen.unit_collection(n, 3));
    const auto k = gen.size(1, n - 1);
    bool gap_rule = true;
    for (std::size_t i = 0; i + k < n; ++i) gap_rule &= c[i + k].center - c[i].center <= 1.0;
    CHECK(k_connected_exhaustive(build_intersection_graph(c), k) == gap_rule);
  }
}

TEST_CASE("connectivity above the exhaustive cap uses the gap rule") {
  std::vector<Interval> items;
  for (int i = 0; i < 20; ++i) items.push_back({0.5 * i, 1, 1});
  const Collection chain(items);
  CHECK(check_property(chain, GraphProperty::kKConnected, 2).holds);
  CHECK_FALSE(check_property(chain, GraphProperty::kKConnected, 3).holds);
}

TEST_CASE("grid search examples") {
  auto r = grid_search_lp(centers({0, 0, 0}), {Property::kEdgeless, 2, 1e-6});
  REQUIRE(r.found);
  CHECK(std::abs(r.cost - 2.0) <= 1e-3);
  r = grid_search_lp(centers({0, 5}), {Property::kEdgeless, 2, 1e-6});
  CHECK(r.cost == 0.0);
  r = grid_search_lp(centers({0, 0}), {Property::kNoKClique, 2, 1e-6});
  CHECK(std::abs(r.cost - 1.0) <= 1e-3);
  r = grid_search_lp(centers({0, 1, 4}), {Property::kKConnected, 1, 1e-6});
  CHECK(std::abs(r.cost - 2.0) <= 1e-3);
  CHECK_THROWS_AS(grid_search_lp(centers({0, 1, 2, 3, 4}), {}), std::invalid_argument);
}
