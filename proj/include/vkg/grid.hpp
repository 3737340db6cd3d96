#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace vkg {

/// Uniform node-centered axis: nodes lo + i h, i = 0..count-1.
struct Axis {
  double lo = 0.0;
  double h = 1.0;
  int count = 1;

  double at(int i) const { return lo + i * h; }
  double hi() const { return lo + (count - 1) * h; }
  /// Symmetric axis [-extent, extent] with an odd node count so that 0 is a node.
  static Axis symmetric(double extent, int count);
  /// Trapezoid weight of node i.
  double weight(int i) const { return (i == 0 || i == count - 1) ? 0.5 * h : h; }
};

/// Tensor grid over (x, v) in R^n x R^n, n in {1, 2}. Phase arrays are stored
/// row-major as [x1][x2][v1][v2]; field arrays as [x1][x2].
struct PhaseGrid {
  int n = 1;
  std::array<Axis, 2> x{};
  std::array<Axis, 2> v{};

  std::size_t nx() const { return n == 1 ? x[0].count : static_cast<std::size_t>(x[0].count) * x[1].count; }
  std::size_t nv() const { return n == 1 ? v[0].count : static_cast<std::size_t>(v[0].count) * v[1].count; }
  std::size_t size() const { return nx() * nv(); }

  std::size_t x_index(int i1, int i2 = 0) const { return n == 1 ? i1 : static_cast<std::size_t>(i1) * x[1].count + i2; }
  std::size_t v_index(int j1, int j2 = 0) const { return n == 1 ? j1 : static_cast<std::size_t>(j1) * v[1].count + j2; }
  std::array<int, 2> x_coords(std::size_t xi) const;
  std::array<int, 2> v_coords(std::size_t vi) const;
  std::array<double, 2> x_at(std::size_t xi) const;
  std::array<double, 2> v_at(std::size_t vi) const;

  /// Trapezoid weights of the spatial and velocity node sets.
  std::vector<double> x_weights() const;
  std::vector<double> v_weights() const;
};

struct PhaseState {
  double t = 0.0;
  std::vector<double> f;
};

struct FieldState {
  double t = 0.0;
  std::vector<double> phi;
  std::vector<double> pi;
};

/// rho(x) = int f(x, v) dv with the trapezoid rule. When `edge_max` is given it
/// receives the largest |f| on the velocity boundary (truncation indicator).
std::vector<double> source_density(const PhaseGrid& g, const PhaseState& s, double* edge_max = nullptr);

/// Weighted velocity sum: w holds the quadrature weight times the moment weight at each v node.
std::vector<double> velocity_moment(const PhaseGrid& g, const std::vector<double>& f, const std::vector<double>& w);

double total_mass(const PhaseGrid& g, const PhaseState& s);

}  // namespace vkg
