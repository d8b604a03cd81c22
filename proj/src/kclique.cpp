#include "intershift/kclique.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "intershift/endpoint_index.hpp"

namespace intershift {
namespace {

double scratch_cost(const std::vector<Interval>& sorted, std::size_t start, std::size_t k,
                    double x) {
  double d = 0.0;
  for (std::size_t j = start; j < start + k; ++j) d += moving_distance(sorted[j], x);
  return d;
}

struct WindowCost {
  double cost;
  double point;
};

// Prefer the k-th endpoint unless the (k+1)-th is strictly cheaper.
WindowCost best_of(double d_k, double x_k, double d_k1, double x_k1) {
  return d_k <= d_k1 ? WindowCost{d_k, x_k} : WindowCost{d_k1, x_k1};
}

}  // namespace

double update_same_window(double d_at_xn, double x_n, double x_np1, std::size_t left_count,
                          std::size_t right_count, double slope) {
  const double balance = static_cast<double>(left_count) - static_cast<double>(right_count);
  return d_at_xn + (x_np1 - x_n) * slope * balance;
}

double update_shift_window(double d_prev, double x_prev, double x_new, const SlideCounts& counts,
                           double d_out, double d_in, double slope) {
  const double gap = std::abs(x_prev - x_new);
  double balance;
  if (x_new >= x_prev) {
    balance = static_cast<double>(counts.left_at_new) - static_cast<double>(counts.right_at_prev);
  } else {
    balance = static_cast<double>(counts.right_at_new) - static_cast<double>(counts.left_at_prev);
  }
  return d_prev + gap * slope * balance + d_in - d_out;
}

CliqueResult solve_kclique(const Collection& c, std::size_t k, KCliqueOptions options) {
  if (c.empty()) throw std::invalid_argument("empty instance");
  if (k < 1 || k > c.size()) {
    throw std::invalid_argument("k must lie in [1, n]");
  }
  if (!c.uniform_weight()) throw std::invalid_argument("requires unique moving distance function");
  if (!c.uniform_length()) throw std::invalid_argument("requires intervals of equal length");

  const std::size_t n = c.size();
  const auto order = sort_order(c);
  std::vector<Interval> sorted;
  sorted.reserve(n);
  for (auto i : order) sorted.push_back(c[i]);
  const double slope = sorted.front().weight;

  EndpointIndex index(c.endpoints());
  for (std::size_t j = 0; j < k; ++j) index.insert(sorted[j]);

  double x_k = index.select(k);
  double x_k1 = index.select(k + 1);
  double d_k = scratch_cost(sorted, 0, k, x_k);
  double d_k1 = update_same_window(d_k, x_k, x_k1, index.count_right_below(x_k1),
                                   index.count_left_above(x_k), slope);

  CliqueResult result;
  if (options.trace) {
    result.trace.push_back({1, x_k, x_k1, d_k, d_k, d_k1, scratch_cost(sorted, 0, k, x_k1), true});
  }

  std::size_t best_start = 0;
  WindowCost best = best_of(d_k, x_k, d_k1, x_k1);

  for (std::size_t start = 1; start + k <= n; ++start) {
    const Interval& out = sorted[start - 1];
    const Interval& in = sorted[start + k - 1];
    const double x_prev = x_k1;

    index.insert(in);
    index.erase(out);
    const double x_new = index.select(k);

    const double lo = std::min(x_prev, x_new);
    const double hi = std::max(x_prev, x_new);
    std::size_t between = index.count_between(lo, hi);
    for (double e : {out.left(), out.right()}) {
      if (lo < e && e < hi) ++between;
    }
    const bool gap_free = between == 0;
    assert(gap_free && "endpoint between consecutive window medians");

    const SlideCounts counts{index.count_right_below(x_new), index.count_left_above(x_new),
                             index.count_right_below(x_prev), index.count_left_above(x_prev)};
    d_k = update_shift_window(d_k1, x_prev, x_new, counts, moving_distance(out, x_prev),
                              moving_distance(in, x_prev), slope);
    x_k = x_new;
    x_k1 = index.select(k + 1);
    d_k1 = update_same_window(d_k, x_k, x_k1, index.count_right_below(x_k1),
                              index.count_left_above(x_k), slope);

    if (options.trace) {
      result.trace.push_back({start + 1, x_k, x_k1, d_k, scratch_cost(sorted, start, k, x_k), d_k1,
                              scratch_cost(sorted, start, k, x_k1), gap_free});
    }

    const WindowCost here = best_of(d_k, x_k, d_k1, x_k1);
    // Ties keep the earlier window; the slack absorbs drift of the running sum.
    if (here.cost < best.cost - 1e-12 * std::max(1.0, std::abs(best.cost))) {
      best = here;
      best_start = start;
    }
  }

  // Report the exact cost of the chosen window rather than the running value.
  std::vector<double> d(n, 0.0);
  for (std::size_t j = best_start; j < best_start + k; ++j) {
    const Interval& it = sorted[j];
    const std::size_t original = order[j];
    if (it.right() < best.point) {
      d[original] = best.point - it.right();
    } else if (it.left() > best.point) {
      d[original] = best.point - it.left();
    }
    result.members.push_back(original);
  }
  result.window_start = best_start + 1;
  result.point = best.point;
  result.shifts = make_shift_solution(c, std::move(d));
  result.cost = result.shifts.total_cost;
  return result;
}

}  // namespace intershift
