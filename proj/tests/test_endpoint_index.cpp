#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "intershift/endpoint_index.hpp"
#include "support.hpp"

using namespace intershift;

TEST_CASE("endpoint index answers order statistics over the live set") {
  const auto c = testing::centers({0, 2, 4});
  EndpointIndex idx(c.endpoints());
  CHECK(idx.size() == 0);
  CHECK_THROWS_AS(idx.select(1), std::out_of_range);
  for (const auto& it : c.items()) idx.insert(it);
  CHECK(idx.size() == 6);
  CHECK(idx.select(3) == 1.5);
  CHECK(idx.select(4) == 2.5);
  CHECK(idx.rank(2.5) == 3);
  CHECK(idx.count_between(-0.5, 2.5) == 2);
  CHECK(idx.count_right_below(2.0) == 1);
  CHECK(idx.count_left_above(2.0) == 1);
  CHECK(idx.count_right_below(0.5) == 0);
  idx.erase(c[0]);
  CHECK(idx.select(1) == 1.5);
  CHECK(idx.count_right_below(3.0) == 1);
  CHECK(idx.count_right_below(2.5) == 0);
}

TEST_CASE("endpoint index matches a sorted vector under random updates") {
  testing::Gen gen(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto c = gen.collection(gen.size(1, 120), 20, 1, true);
    EndpointIndex idx(c.endpoints());
    std::vector<bool> live(c.size(), false);
    for (int step = 0; step < 300; ++step) {
      const auto i = gen.size(0, c.size() - 1);
      if (live[i]) idx.erase(c[i]); else idx.insert(c[i]);
      live[i] = !live[i];

      std::vector<double> pts;
      std::size_t lefts_above = 0, rights_below = 0;
      const double x = gen.half_grid(22);
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (!live[j]) continue;
        pts.push_back(c[j].left());
        pts.push_back(c[j].right());
        if (c[j].right() < x) ++rights_below;
        if (c[j].left() > x) ++lefts_above;
      }
      std::sort(pts.begin(), pts.end());
      REQUIRE(idx.size() == pts.size());
      if (!pts.empty()) {
        const auto k = gen.size(1, pts.size());
        CHECK(idx.select(k) == pts[k - 1]);
      }
      CHECK(idx.rank(x) == static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), x) - pts.begin()));
      CHECK(idx.count_right_below(x) == rights_below);
      CHECK(idx.count_left_above(x) == lefts_above);
      const double y = x + std::abs(gen.half_grid(5));
      const auto between = std::count_if(pts.begin(), pts.end(), [&](double e) { return x < e && e < y; });
      CHECK(idx.count_between(x, y) == static_cast<std::size_t>(between));
    }
  }
}
