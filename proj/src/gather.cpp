#include "intershift/gather.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace intershift {
namespace {

struct CenterLengthKey {
  std::uint64_t center;
  std::uint64_t length;
  bool operator==(const CenterLengthKey&) const = default;
};

struct CenterLengthHash {
  std::size_t operator()(const CenterLengthKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.center * 0x9e3779b97f4a7c15ULL ^ k.length);
  }
};

CenterLengthKey key_of(const Interval& it) {
  // +0.0 folds -0.0 onto the same key.
  return {std::bit_cast<std::uint64_t>(it.center + 0.0), std::bit_cast<std::uint64_t>(it.length)};
}

bool near_equal(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

// State of the prune-and-search. The optimum lies in [lo, hi]. Intervals
// entirely left of lo are folded into (left_cost, left_weight) = (D(L, lo),
// weight of L); symmetrically on the right. Intervals spanning the whole window
// contribute zero inside it and are dropped. The remaining active intervals
// all own at least one endpoint inside [lo, hi].
class GatherSearch {
 public:
  explicit GatherSearch(const Collection& c) : active_(c.items().begin(), c.items().end()) {
    lo_ = c.leftmost();
    hi_ = c.rightmost();
  }

  double cost_at(double x) const {
    double d = left_cost_ + left_weight_ * (x - lo_) + right_cost_ + right_weight_ * (hi_ - x);
    for (const auto& it : active_) d += moving_distance(it, x);
    return d;
  }

  std::vector<double> window_endpoints() const {
    std::vector<double> pts;
    pts.reserve(2 * active_.size());
    for (const auto& it : active_) {
      if (it.left() >= lo_) pts.push_back(it.left());
      if (it.right() <= hi_) pts.push_back(it.right());
    }
    return pts;
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }

  void shrink_right(double new_hi) {
    right_cost_ += right_weight_ * (hi_ - new_hi);
    hi_ = new_hi;
    compact();
  }

  void shrink_left(double new_lo) {
    left_cost_ += left_weight_ * (new_lo - lo_);
    lo_ = new_lo;
    compact();
  }

 private:
  void compact() {
    std::size_t kept = 0;
    for (const auto& it : active_) {
      if (it.right() < lo_) {
        left_cost_ += moving_distance(it, lo_);
        left_weight_ += it.weight;
      } else if (it.left() > hi_) {
        right_cost_ += moving_distance(it, hi_);
        right_weight_ += it.weight;
      } else if (it.left() < lo_ && it.right() > hi_) {
        // spans the window
      } else {
        active_[kept++] = it;
      }
    }
    active_.resize(kept);
  }

  std::vector<Interval> active_;
  double lo_ = 0.0;
  double hi_ = 0.0;
  double left_cost_ = 0.0;
  double left_weight_ = 0.0;
  double right_cost_ = 0.0;
  double right_weight_ = 0.0;
};

GatherResult finish(const Collection& c, double lo, double hi, double cost) {
  GatherResult r;
  r.point_lo = lo;
  r.point_hi = hi;
  r.cost = cost;
  r.shifts = gathering_shifts(c, lo);
  return r;
}

}  // namespace

Collection merge_coincident(const Collection& c) {
  std::unordered_map<CenterLengthKey, std::size_t, CenterLengthHash> slot;
  slot.reserve(c.size());
  std::vector<Interval> merged;
  merged.reserve(c.size());
  for (const auto& it : c.items()) {
    auto [pos, inserted] = slot.try_emplace(key_of(it), merged.size());
    if (inserted) {
      merged.push_back(it);
    } else {
      merged[pos->second].weight += it.weight;
    }
  }
  return Collection(std::move(merged));
}

ShiftSolution gathering_shifts(const Collection& c, double x) {
  std::vector<double> d(c.size(), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].right() < x) {
      d[i] = x - c[i].right();
    } else if (c[i].left() > x) {
      d[i] = x - c[i].left();
    }
  }
  return make_shift_solution(c, std::move(d));
}

GatherResult find_optimal_gathering_point(const Collection& c, GatherOptions options) {
  if (c.empty()) throw std::invalid_argument("empty instance");
  GatherSearch search(c);

  for (;;) {
    auto pts = search.window_endpoints();
    const auto mid = pts.begin() + static_cast<std::ptrdiff_t>((pts.size() - 1) / 2);
    select_nth(pts.begin(), mid, pts.end(), options.selection);
    const double x = *mid;

    // Nearest endpoints strictly left and right of x inside the window.
    std::optional<double> prev, next;
    for (double e : pts) {
      if (e < x && (!prev || e > *prev)) prev = e;
      if (e > x && (!next || e < *next)) next = e;
    }

    const double dx = search.cost_at(x);
    const std::optional<double> d_prev = prev ? std::optional(search.cost_at(*prev)) : std::nullopt;
    const std::optional<double> d_next = next ? std::optional(search.cost_at(*next)) : std::nullopt;
    const bool go_left = d_prev && *d_prev < dx;
    const bool go_right = d_next && *d_next < dx;

    if (!go_left && !go_right) {
      // D changes slope at every endpoint, so the flat optimal piece is at
      // most one gap wide. A missing neighbour lies outside the window, where
      // D is strictly larger.
      const double lo = (d_prev && near_equal(*d_prev, dx)) ? *prev : x;
      const double hi = (d_next && near_equal(*d_next, dx)) ? *next : x;
      return finish(c, lo, hi, dx);
    }
    if (go_left && (!go_right || *d_prev <= *d_next)) {
      search.shrink_right(*prev);
    } else {
      search.shrink_left(*next);
    }
  }
}

GatherResult uniform_slope_gathering_point(const Collection& c, GatherOptions options) {
  if (c.empty()) throw std::invalid_argument("empty instance");
  if (!c.uniform_weight()) {
    throw std::invalid_argument("requires unique moving distance function");
  }
  const std::size_t n = c.size();
  auto pts = c.endpoints();
  const auto nth = pts.begin() + static_cast<std::ptrdiff_t>(n - 1);
  select_nth(pts.begin(), nth, pts.end(), options.selection);
  const double lo = *nth;
  const double hi = *std::min_element(nth + 1, pts.end());
  return finish(c, lo, hi, total_moving_distance(c, lo));
}

}  // namespace intershift
