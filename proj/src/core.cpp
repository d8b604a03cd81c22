#include "intershift/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace intershift {

void validate(const Interval& interval) {
  if (!std::isfinite(interval.center)) {
    throw std::invalid_argument("interval center must be finite");
  }
  if (!(interval.length > 0.0) || !std::isfinite(interval.length)) {
    throw std::invalid_argument("interval length must be positive");
  }
  if (!(interval.weight > 0.0) || !std::isfinite(interval.weight)) {
    throw std::invalid_argument("interval weight must be positive");
  }
}

Collection::Collection(std::vector<Interval> items) : items_(std::move(items)) {
  for (const auto& it : items_) validate(it);
  sorted_ = std::is_sorted(items_.begin(), items_.end(),
                           [](const Interval& a, const Interval& b) { return a.center < b.center; });
}

std::vector<double> Collection::endpoints() const {
  std::vector<double> out;
  out.reserve(2 * items_.size());
  for (const auto& it : items_) {
    out.push_back(it.left());
    out.push_back(it.right());
  }
  return out;
}

double Collection::leftmost() const {
  if (items_.empty()) throw std::invalid_argument("empty instance");
  double v = items_.front().left();
  for (const auto& it : items_) v = std::min(v, it.left());
  return v;
}

double Collection::rightmost() const {
  if (items_.empty()) throw std::invalid_argument("empty instance");
  double v = items_.front().right();
  for (const auto& it : items_) v = std::max(v, it.right());
  return v;
}

bool Collection::uniform_weight() const noexcept {
  return std::all_of(items_.begin(), items_.end(),
                     [&](const Interval& it) { return it.weight == items_.front().weight; });
}

bool Collection::uniform_length() const noexcept {
  return std::all_of(items_.begin(), items_.end(),
                     [&](const Interval& it) { return it.length == items_.front().length; });
}

double shift_cost(const Collection& c, std::span<const double> displacements) {
  if (displacements.size() != c.size()) {
    throw std::invalid_argument("shift vector has " + std::to_string(displacements.size()) +
                                " entries for " + std::to_string(c.size()) + " intervals");
  }
  double cost = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) cost += c[i].weight * std::abs(displacements[i]);
  return cost;
}

ShiftSolution make_shift_solution(const Collection& c, std::vector<double> displacements) {
  const double cost = shift_cost(c, displacements);
  return {std::move(displacements), cost};
}

double moving_distance(const Interval& interval, double x) noexcept {
  const double half = interval.length / 2;
  if (x - half - interval.center > 0.0) return interval.weight * (x - interval.center - half);
  if (x + half - interval.center < 0.0) return interval.weight * (interval.center - x - half);
  return 0.0;
}

double total_moving_distance(const Collection& c, double x) {
  if (c.empty()) throw std::invalid_argument("empty instance");
  double sum = 0.0;
  for (const auto& it : c.items()) sum += moving_distance(it, x);
  return sum;
}

std::vector<std::size_t> sort_order(const Collection& c) {
  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return c[a].center < c[b].center; });
  return order;
}

Collection sort_by_center(const Collection& c) {
  std::vector<Interval> items;
  items.reserve(c.size());
  for (auto i : sort_order(c)) items.push_back(c[i]);
  return Collection(std::move(items));
}

double kth_endpoint(const Collection& c, std::size_t k) {
  if (k < 1 || k > 2 * c.size()) {
    throw std::out_of_range("endpoint index " + std::to_string(k) + " outside [1, " +
                            std::to_string(2 * c.size()) + "]");
  }
  auto pts = c.endpoints();
  std::nth_element(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(k - 1), pts.end());
  return pts[k - 1];
}

LeftRightCounts left_right_counts(const Collection& c, double x) {
  LeftRightCounts counts;
  for (const auto& it : c.items()) {
    if (it.right() < x) ++counts.left;
    if (it.left() > x) ++counts.right;
  }
  return counts;
}

bool IntersectionGraph::has_edge(std::size_t i, std::size_t j) const {
  const auto& adj = adjacency_.at(i);
  return std::binary_search(adj.begin(), adj.end(), j);
}

std::vector<std::pair<std::size_t, std::size_t>> IntersectionGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edges_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (auto v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void IntersectionGraph::add_edge(std::size_t i, std::size_t j) {
  if (i == j) return;
  adjacency_.at(i).push_back(j);
  adjacency_.at(j).push_back(i);
  ++edges_;
}

void IntersectionGraph::finalize() {
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

IntersectionGraph build_intersection_graph(const Collection& c, GraphBuild mode,
                                           double tolerance) {
  IntersectionGraph g(c.size());
  if (mode == GraphBuild::kPairwise) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (std::max(c[i].left(), c[j].left()) <= std::min(c[i].right(), c[j].right()) + tolerance) {
          g.add_edge(i, j);
        }
      }
    }
  } else {
    // Visit intervals by left endpoint; every later interval whose left
    // endpoint is within reach of the current right endpoint overlaps it.
    std::vector<std::size_t> by_left(c.size());
    std::iota(by_left.begin(), by_left.end(), std::size_t{0});
    std::stable_sort(by_left.begin(), by_left.end(),
                     [&](std::size_t a, std::size_t b) { return c[a].left() < c[b].left(); });
    for (std::size_t a = 0; a < by_left.size(); ++a) {
      const double reach = c[by_left[a]].right() + tolerance;
      for (std::size_t b = a + 1; b < by_left.size() && c[by_left[b]].left() <= reach; ++b) {
        g.add_edge(by_left[a], by_left[b]);
      }
    }
  }
  g.finalize();
  return g;
}

Collection apply_shifts(const Collection& c, const ShiftSolution& s) {
  if (s.displacements.size() != c.size()) {
    throw std::invalid_argument("shift vector size does not match collection size");
  }
  std::vector<Interval> moved(c.items().begin(), c.items().end());
  for (std::size_t i = 0; i < moved.size(); ++i) moved[i].center += s.displacements[i];
  return sort_by_center(Collection(std::move(moved)));
}

}  // namespace intershift
