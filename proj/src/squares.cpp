#include "intershift/squares.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace intershift {
namespace {

Collection axis_instance(std::span<const UnitSquare> squares, double UnitSquare::*coord) {
  std::vector<Interval> items;
  items.reserve(squares.size());
  for (const auto& s : squares) items.push_back({s.*coord, 1.0, s.weight});
  return Collection(std::move(items));
}

}  // namespace

double square_moving_distance(const UnitSquare& s, Point2 p) noexcept {
  return s.weight * (std::max(std::abs(s.x - p.x) - 0.5, 0.0) +
                     std::max(std::abs(s.y - p.y) - 0.5, 0.0));
}

double total_square_moving_distance(std::span<const UnitSquare> squares, Point2 p) {
  if (squares.empty()) throw std::invalid_argument("empty instance");
  double sum = 0.0;
  for (const auto& s : squares) sum += square_moving_distance(s, p);
  return sum;
}

Collection x_axis_instance(std::span<const UnitSquare> squares) {
  return axis_instance(squares, &UnitSquare::x);
}

Collection y_axis_instance(std::span<const UnitSquare> squares) {
  return axis_instance(squares, &UnitSquare::y);
}

SquareGatherResult find_optimal_gathering_point_l1(std::span<const UnitSquare> squares,
                                                   GatherOptions options) {
  if (squares.empty()) throw std::invalid_argument("empty instance");
  const auto gx = find_optimal_gathering_point(x_axis_instance(squares), options);
  const auto gy = find_optimal_gathering_point(y_axis_instance(squares), options);

  SquareGatherResult r;
  r.point = {gx.point_lo, gy.point_lo};
  r.cost = gx.cost + gy.cost;
  r.x_range = {gx.point_lo, gx.point_hi};
  r.y_range = {gy.point_lo, gy.point_hi};
  r.shifts.reserve(squares.size());
  for (std::size_t i = 0; i < squares.size(); ++i) {
    r.shifts.push_back({gx.shifts.displacements[i], gy.shifts.displacements[i]});
  }
  return r;
}

}  // namespace intershift
