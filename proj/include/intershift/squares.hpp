#pragma once

// Gathering axis-aligned unit squares under the L1 metric. The cost separates
// into an x-axis and a y-axis unit-interval instance, each solved on its own.

#include <span>
#include <utility>
#include <vector>

#include "intershift/gather.hpp"

namespace intershift {

struct UnitSquare {
  double x = 0.0;
  double y = 0.0;
  double weight = 1.0;
  friend bool operator==(const UnitSquare&, const UnitSquare&) = default;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct SquareShift {
  double dx = 0.0;
  double dy = 0.0;
};

struct SquareGatherResult {
  Point2 point;
  double cost = 0.0;
  std::vector<SquareShift> shifts;
  // The optimum region is the rectangle x_range x y_range.
  std::pair<double, double> x_range;
  std::pair<double, double> y_range;
};

double square_moving_distance(const UnitSquare& s, Point2 p) noexcept;
double total_square_moving_distance(std::span<const UnitSquare> squares, Point2 p);

/// Unit-interval instances built from the square centers on one axis.
Collection x_axis_instance(std::span<const UnitSquare> squares);
Collection y_axis_instance(std::span<const UnitSquare> squares);

SquareGatherResult find_optimal_gathering_point_l1(std::span<const UnitSquare> squares,
                                                   GatherOptions options = {});

}  // namespace intershift
