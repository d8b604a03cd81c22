#include <doctest.h>

#include <algorithm>
#include <vector>

#include "intershift/select.hpp"
#include "support.hpp"

using namespace intershift;

TEST_CASE("median-of-medians selection agrees with sorting") {
  testing::Gen gen(3);
  for (int trial = 0; trial < 400; ++trial) {
    const auto n = gen.size(1, 300);
    std::vector<double> v(n);
    // Few distinct values stress the three-way partition.
    const long spread = trial % 3 == 0 ? 3 : 1000;
    for (auto& x : v) x = static_cast<double>(gen.integer(-spread, spread));
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end());
    const auto k = gen.size(0, n - 1);
    for (auto mode : {SelectionMode::kMedianOfMedians, SelectionMode::kIntroselect}) {
      auto work = v;
      select_nth(work.begin(), work.begin() + static_cast<long>(k), work.end(), mode);
      REQUIRE(work[k] == sorted[k]);
      CHECK(std::all_of(work.begin(), work.begin() + static_cast<long>(k),
                        [&](double x) { return x <= work[k]; }));
      CHECK(std::all_of(work.begin() + static_cast<long>(k), work.end(),
                        [&](double x) { return x >= work[k]; }));
    }
  }
}

TEST_CASE("selection handles tiny and constant ranges") {
  std::vector<double> one{4.0};
  select_nth(one.begin(), one.begin(), one.end());
  CHECK(one[0] == 4.0);
  std::vector<double> same(97, 2.0);
  select_nth(same.begin(), same.begin() + 50, same.end());
  CHECK(same[50] == 2.0);
}
