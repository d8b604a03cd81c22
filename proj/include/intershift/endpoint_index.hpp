#pragma once

#include <cstddef>
#include <vector>

#include "intershift/core.hpp"

namespace intershift {

/// Order-statistic multiset over interval endpoints drawn from a fixed
/// universe of coordinates. Coordinates are compressed once; counts live in
/// Fenwick trees, so every operation is O(log n).
class EndpointIndex {
 public:
  explicit EndpointIndex(std::vector<double> universe);

  void insert(const Interval& interval);
  void erase(const Interval& interval);

  /// Number of endpoints currently stored (twice the interval count).
  std::size_t size() const noexcept { return size_; }

  /// k-th smallest stored endpoint, 1-based. Throws std::out_of_range.
  double select(std::size_t k) const;

  /// Stored endpoints strictly below x.
  std::size_t rank(double x) const;
  /// Stored endpoints e with a < e < b.
  std::size_t count_between(double a, double b) const;

  /// |L(W, x)|: stored intervals whose right endpoint is < x.
  std::size_t count_right_below(double x) const;
  /// |R(W, x)|: stored intervals whose left endpoint is > x.
  std::size_t count_left_above(double x) const;

 private:
  class Fenwick {
   public:
    explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}
    void add(std::size_t pos, long delta);
    long prefix(std::size_t count) const;  // sum over positions [0, count)
    std::size_t lower_bound(long k) const; // smallest pos with prefix(pos+1) >= k
   private:
    std::vector<long> tree_;
  };

  std::size_t slot(double value) const;
  std::size_t count_below(double x) const;        // universe positions with value < x
  std::size_t count_at_most(double x) const;      // universe positions with value <= x

  std::vector<double> values_;
  Fenwick all_;
  Fenwick lefts_;
  Fenwick rights_;
  std::size_t size_ = 0;
};

}  // namespace intershift
