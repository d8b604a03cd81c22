#pragma once

// Domain types shared by every solver: weighted closed intervals, collections
// of them, shift vectors and the intersection graph they induce.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace intershift {

/// A closed segment [center - length/2, center + length/2] carrying a slope
/// weight that prices every unit of translation.
struct Interval {
  double center = 0.0;
  double length = 1.0;
  double weight = 1.0;

  double left() const noexcept { return center - length / 2; }
  double right() const noexcept { return center + length / 2; }
  bool contains(double x) const noexcept { return left() <= x && x <= right(); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Throws std::invalid_argument unless length and weight are finite and
/// positive and the center is finite.
void validate(const Interval& interval);

/// Ordered multiset of intervals. Stores items by value; endpoint queries are
/// computed on demand.
class Collection {
 public:
  Collection() = default;
  explicit Collection(std::vector<Interval> items);

  std::span<const Interval> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const Interval& operator[](std::size_t i) const { return items_[i]; }

  /// True when centers are non-decreasing in storage order.
  bool sorted_by_center() const noexcept { return sorted_; }

  /// All 2n endpoints, duplicates kept, in storage order (left, right, ...).
  std::vector<double> endpoints() const;

  double leftmost() const;
  double rightmost() const;

  bool uniform_weight() const noexcept;
  bool uniform_length() const noexcept;

  friend bool operator==(const Collection& a, const Collection& b) {
    return a.items_ == b.items_;
  }

 private:
  std::vector<Interval> items_;
  bool sorted_ = true;
};

/// One signed displacement per interval (input order) and the weighted cost.
struct ShiftSolution {
  std::vector<double> displacements;
  double total_cost = 0.0;
};

/// Sum of weight_i * |d_i|. Throws on size mismatch.
double shift_cost(const Collection& c, std::span<const double> displacements);
ShiftSolution make_shift_solution(const Collection& c, std::vector<double> displacements);

/// Weighted cost for `interval` to travel just far enough to contain x.
double moving_distance(const Interval& interval, double x) noexcept;

/// Sum of moving_distance over the collection. Throws on an empty collection.
double total_moving_distance(const Collection& c, double x);

/// Stable permutation ordering the collection by center.
std::vector<std::size_t> sort_order(const Collection& c);
Collection sort_by_center(const Collection& c);

/// k-th smallest endpoint (1-based) of the endpoint multiset. Throws
/// std::out_of_range unless 1 <= k <= 2n.
double kth_endpoint(const Collection& c, std::size_t k);

struct LeftRightCounts {
  std::size_t left = 0;   // r(I) < x
  std::size_t right = 0;  // l(I) > x
  friend bool operator==(const LeftRightCounts&, const LeftRightCounts&) = default;
};
LeftRightCounts left_right_counts(const Collection& c, double x);

/// Intersection graph over closed intervals. Adjacency lists are sorted.
class IntersectionGraph {
 public:
  explicit IntersectionGraph(std::size_t n = 0) : adjacency_(n) {}

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  bool has_edge(std::size_t i, std::size_t j) const;
  std::span<const std::size_t> neighbors(std::size_t v) const { return adjacency_[v]; }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  void add_edge(std::size_t i, std::size_t j);
  void finalize();

  friend bool operator==(const IntersectionGraph& a, const IntersectionGraph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edges_ = 0;
};

enum class GraphBuild { kSweep, kPairwise };

/// Two intervals are adjacent when max(l) <= min(r) + tolerance. The sweep
/// runs in O(n log n + |E|); the pairwise mode is the quadratic reference.
IntersectionGraph build_intersection_graph(const Collection& c,
                                           GraphBuild mode = GraphBuild::kSweep,
                                           double tolerance = 0.0);

/// Interval i moves to center c_i + d_i; the result is re-sorted by center.
Collection apply_shifts(const Collection& c, const ShiftSolution& s);

}  // namespace intershift
