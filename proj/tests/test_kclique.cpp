#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "intershift/gather.hpp"
#include "intershift/kclique.hpp"
#include "intershift/oracle.hpp"
#include "support.hpp"

using namespace intershift;
using intershift::testing::centers;
using intershift::testing::Gen;

TEST_CASE("k-clique examples") {
  auto r = solve_kclique(centers({0, 3, 6, 9, 12}), 2);
  CHECK(r.cost == 2.0);
  CHECK(r.window_start == 1);
  CHECK(r.point == 0.5);
  CHECK(r.members == std::vector<std::size_t>{0, 1});
  CHECK(r.shifts.displacements == std::vector<double>{0, -2, 0, 0, 0});

  r = solve_kclique(centers({0, 1.2, 1.4, 5}), 3);
  CHECK(r.cost == doctest::Approx(0.4));
  CHECK(r.window_start == 1);
  CHECK(r.point == doctest::Approx(0.7));

  r = solve_kclique(centers({4, 0, 2}), 1);
  CHECK(r.cost == 0.0);
  CHECK(r.window_start == 1);

  // k = n is plain gathering.
  r = solve_kclique(centers({0, 2, 4}), 3);
  CHECK(r.cost == 3.0);
  CHECK(r.cost == uniform_slope_gathering_point(centers({0, 2, 4})).cost);
}

TEST_CASE("k-clique input validation") {
  CHECK_THROWS_AS(solve_kclique(Collection{}, 1), std::invalid_argument);
  CHECK_THROWS_AS(solve_kclique(centers({0, 1}), 0), std::invalid_argument);
  CHECK_THROWS_AS(solve_kclique(centers({0, 1}), 3), std::invalid_argument);
  CHECK_THROWS_AS(solve_kclique(Collection({{0, 1, 1}, {1, 1, 2}}), 2), std::invalid_argument);
  CHECK_THROWS_AS(solve_kclique(Collection({{0, 1, 1}, {1, 2, 1}}), 2), std::invalid_argument);
  // Equal non-unit lengths are fine.
  CHECK(solve_kclique(Collection({{0, 2, 1}, {5, 2, 1}}), 2).cost == 3.0);
}

TEST_CASE("same-window update") {
  // {0,2,4}: D(x3 = 1.5) = 3, x4 = 2.5, |L(2.5)| = 1, |R(1.5)| = 1.
  CHECK(update_same_window(3.0, 1.5, 2.5, 1, 1) == 3.0);
  // {0,3}: D(0.5) = 2, x3 = 2.5, |L(2.5)| = 1, |R(0.5)| = 1.
  CHECK(update_same_window(2.0, 0.5, 2.5, 1, 1) == 2.0);
  CHECK(update_same_window(1.0, 0.0, 2.0, 3, 1, 0.5) == 3.0);
}

TEST_CASE("shift-window update") {
  // {0,3,6} with k = 2: window {0,3} has x3 = 2.5 and D = 2. The next window
  // {3,6} has x2 = 3.5. Removing I_1 (d_out = 2 at 2.5), adding I_3 (d_in = 3).
  SlideCounts counts;
  counts.left_at_new = 0;    // nothing in {3,6} ends before 3.5
  counts.right_at_prev = 1;  // 6 starts after 2.5
  const double d = update_shift_window(2.0, 2.5, 3.5, counts, 2.0, 3.0);
  const auto next = centers({3, 6});
  CHECK(d == total_moving_distance(next, 3.5));
}

TEST_CASE("solver agrees with window enumeration and traces are exact") {
  Gen gen(909);
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = gen.size(1, 60);
    const auto c = gen.unit_collection(n, 15);
    const auto k = gen.size(1, n);
    const auto r = solve_kclique(c, k, {true});
    const auto o = oracle::oracle_kclique_windows(c, k);
    REQUIRE(r.cost == o.cost);
    CHECK(r.members.size() == k);
    CHECK(r.shifts.total_cost == doctest::Approx(r.cost));
    CHECK(build_intersection_graph(apply_shifts(c, r.shifts)).edge_count() >= k * (k - 1) / 2);
    CHECK(r.trace.size() == n - k + 1);
    for (const auto& t : r.trace) {
      CHECK(t.gap_free);
      CHECK(std::abs(t.incremental_at_k - t.scratch_at_k) <= 1e-9);
      CHECK(std::abs(t.incremental_at_k1 - t.scratch_at_k1) <= 1e-9);
    }
  }
}

TEST_CASE("consecutive windows suffice") {
  Gen gen(910);
  for (int trial = 0; trial < 120; ++trial) {
    const auto n = gen.size(1, 9);
    const auto c = gen.unit_collection(n, 6);
    const auto k = gen.size(1, std::min<std::size_t>(n, 4));
    CHECK(solve_kclique(c, k).cost == oracle::oracle_kclique_full(c, k));
  }
}
