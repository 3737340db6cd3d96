#pragma once

#include <cstddef>
#include <vector>

#include "vkg/grid.hpp"

namespace vkg {

/// Row-major array dimensions of a phase array ([x..][v..]) or field array ([x..]).
std::vector<int> array_dims(const PhaseGrid& g, bool phase);

/// Second-order derivative along one axis of a row-major array: centered in
/// the interior, one-sided three-point at the two ends.
std::vector<double> axis_derivative(const std::vector<double>& a, const std::vector<int>& dims, int axis, double h);

/// 2 * half + 1 consecutive time levels at uniform spacing dt, oldest first.
struct TimeWindow {
  double t_center = 0.0;
  double dt = 0.0;
  std::vector<std::vector<double>> levels;

  int half() const { return (static_cast<int>(levels.size()) - 1) / 2; }
  const std::vector<double>& center() const { return levels[half()]; }
  double time_of(int level) const { return t_center + (level - half()) * dt; }
};

/// Centered time derivative of the window: loses one level at each end.
TimeWindow time_derivative(const TimeWindow& w);

bool needs_time_levels(int id, int n);

/// Z_a (or Zhat_a on phase arrays) applied level by level. Generators with a
/// d_t part consume one level at each end; an error is raised when the window
/// has no neighbours left.
TimeWindow apply_generator(int id, bool lifted, const TimeWindow& w, const PhaseGrid& g, bool phase);

/// Pointwise forms: value of Z_a phi at field node xi, Zhat_a f at phase cell.
double apply_Z(int id, const TimeWindow& phi, const PhaseGrid& g, std::size_t xi);
double apply_Zhat(int id, const TimeWindow& f, const PhaseGrid& g, std::size_t cell);

}  // namespace vkg
