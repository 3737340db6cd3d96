#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace vkg {

/// Point of (n+1)-dimensional Minkowski space in Cartesian coordinates (c = 1).
struct SpacetimePoint {
  double t = 0.0;
  std::vector<double> x;

  int dim() const { return static_cast<int>(x.size()); }
  double radius() const;
};

/// Pseudo-Cartesian coordinates (tau, y) adapted to the hyperboloidal foliation.
struct HyperboloidCoords {
  double tau = 1.0;
  std::vector<double> y;
};

/// Components of the future unit normal to H_tau in the (d_t, d_r) basis.
struct UnitNormal {
  double dt = 1.0;
  double dr = 0.0;
};

struct SliceNode {
  std::vector<double> y;
  double r = 0.0;
  double t = 0.0;
  double weight = 0.0;       // includes the induced volume form (tau/t) r^{n-1}
  double base_weight = 0.0;  // plain dy measure of the same node
};

/// Composite-trapezoid quadrature on the truncated hyperboloid H_tau, |y| <= rmax.
/// For n = 2 the angle is sampled uniformly.
struct SliceQuadrature {
  double tau = 1.0;
  int n = 1;
  double rmax = 0.0;
  std::vector<SliceNode> nodes;

  std::size_t size() const { return nodes.size(); }
  /// Largest Cartesian time touched by the slice nodes.
  double t_max() const;
};

double tau_of(const SpacetimePoint& p);
SpacetimePoint lift_to_cartesian(const HyperboloidCoords& h);
UnitNormal unit_normal(const SpacetimePoint& p);

/// eta(nu, nu) for a vector given as (nu^t, nu^r); signature (-,+,...,+).
double minkowski_norm_sq(const UnitNormal& nu);

double slice_volume_weight(double tau, double r, int n);

/// `resolution` is the number of radial intervals; `angular` the number of
/// angles for n = 2 (0 selects 4 * resolution).
SliceQuadrature build_slice_quadrature(double tau, int n, double rmax, int resolution, int angular = 0);

/// Analytic value of the truncated slice volume: |S^{n-1}| * int_0^rmax (tau/t) r^{n-1} dr.
double truncated_slice_volume(double tau, int n, double rmax);

/// Weighted sum of nodal values. A non-finite value yields a non-finite result
/// and, when `diagnostic` is given, a message naming the first offending node.
double integrate_slice(const SliceQuadrature& q, std::span<const double> values,
                       std::string* diagnostic = nullptr);
double integrate_slice(const SliceQuadrature& q, const std::function<double(const SliceNode&)>& g,
                       std::string* diagnostic = nullptr);

using SpacetimeFunction = std::function<double(double t, std::span<const double> x)>;

/// d/dy^i = (1/t) Omega_{0i} = d_{x^i} + (x^i/t) d_t, by centered differences of step h.
double pseudo_cartesian_derivative(const SpacetimeFunction& field, int i, const SpacetimePoint& p,
                                   double h);

}  // namespace vkg
