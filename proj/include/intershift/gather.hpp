#pragma once

// Minimum-cost gathering point: the point x minimising the total weighted
// moving distance D(C, x). Shifting every interval just far enough to contain
// x makes the intersection graph complete.

#include "intershift/core.hpp"
#include "intershift/select.hpp"

namespace intershift {

/// Every x in [point_lo, point_hi] is optimal; both ends are input endpoints.
struct GatherResult {
  double point_lo = 0.0;
  double point_hi = 0.0;
  double cost = 0.0;
  ShiftSolution shifts;
};

struct GatherOptions {
  SelectionMode selection = SelectionMode::kMedianOfMedians;
};

/// Linear-time prune-and-search over endpoint medians, for arbitrary
/// positive weights. Throws std::invalid_argument on an empty collection.
GatherResult find_optimal_gathering_point(const Collection& c, GatherOptions options = {});

/// With a common weight the n-th and (n+1)-th smallest endpoints bound the
/// optimum. Throws std::invalid_argument when weights differ.
GatherResult uniform_slope_gathering_point(const Collection& c, GatherOptions options = {});

/// Displacement that moves each interval the minimum amount to contain x.
ShiftSolution gathering_shifts(const Collection& c, double x);

/// Folds intervals sharing both center and length into one interval whose
/// weight is the sum. D(C, x) is unchanged for every x.
Collection merge_coincident(const Collection& c);

}  // namespace intershift
