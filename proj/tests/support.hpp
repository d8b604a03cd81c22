#pragma once

// Random instance generators for property-style tests. Coordinates sit on a
// half-integer grid so endpoint arithmetic is exact in binary floating point.

#include <cstdint>
#include <random>
#include <vector>

#include "intershift/core.hpp"
#include "intershift/squares.hpp"

namespace intershift::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  /// Multiple of 0.5 in [-span, span].
  double half_grid(double span) {
    const long s = static_cast<long>(2 * span);
    return static_cast<double>(integer(-s, s)) / 2;
  }

  /// Half-integer centers, integer lengths in [1, 6] when `varied_length`,
  /// integer weights in [1, max_weight].
  Collection collection(std::size_t n, double span, long max_weight = 1, bool varied_length = false) {
    std::vector<Interval> items;
    items.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double length = varied_length ? static_cast<double>(integer(1, 6)) : 1.0;
      items.push_back({half_grid(span), length, static_cast<double>(integer(1, max_weight))});
    }
    return Collection(std::move(items));
  }

  Collection unit_collection(std::size_t n, double span) { return collection(n, span); }

  std::vector<UnitSquare> squares(std::size_t n, double span, long max_weight = 1) {
    std::vector<UnitSquare> out;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = half_grid(span);
      const double y = half_grid(span);
      out.push_back({x, y, static_cast<double>(integer(1, max_weight))});
    }
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Collection centers(std::initializer_list<double> cs) {
  std::vector<Interval> items;
  for (double c : cs) items.push_back({c, 1.0, 1.0});
  return Collection(std::move(items));
}

}  // namespace intershift::testing
