#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "vkg/commutators.hpp"
#include "vkg/polynomials.hpp"

namespace vkg {

/// Point (t, x, v) of phase space; only the first n slots of x and v are used.
struct PhasePoint {
  double t = 0.0;
  int n = 1;
  std::array<double, kMaxDim> x{};
  std::array<double, kMaxDim> v{};

  double v0() const;
};

/// Closed-form function on phase space. Spacetime fields simply ignore v.
using PhaseFunction = std::function<double(const PhasePoint&)>;

// Centered finite differences of step h (second order).
PhaseFunction fd_dt(PhaseFunction f, double h);
PhaseFunction fd_dx(PhaseFunction f, int i, double h);
PhaseFunction fd_dv(PhaseFunction f, int i, double h);

/// Z_a (lifted = false) or Zhat_a (lifted = true) built from centered differences.
PhaseFunction fd_generator(int id, int n, bool lifted, PhaseFunction f, double h);
/// Z_A f = Z_{a_1}(...(Z_{a_q} f)).
PhaseFunction fd_word(const MultiIndex& a, int n, bool lifted, PhaseFunction f, double h);

/// T f = v^0 d_t f + v . grad_x f.
PhaseFunction fd_transport(PhaseFunction f, double h);
/// T_phi f = T f - v^0 grad_x phi . grad_v f.
PhaseFunction fd_vlasov_operator(PhaseFunction f, PhaseFunction phi, double h);

/// exp(-|x - c - w t|^2 / 2 sx^2 - |v - m|^2 / 2 sv^2) times an amplitude and a
/// mild polynomial tilt 1 + tilt * x^1 v^1 so that no symmetry hides errors.
struct GaussianPacket {
  int n = 1;
  double amplitude = 1.0;
  double sigma_x = 1.0;
  double sigma_v = 1.0;
  double tilt = 0.0;
  std::array<double, kMaxDim> center{};
  std::array<double, kMaxDim> drift{};
  std::array<double, kMaxDim> vcenter{};

  double value(const PhasePoint& p) const;
  /// Exact d_{v^i} (1-based i).
  double dv(const PhasePoint& p, int i) const;
  PhaseFunction function() const;
};

/// a exp(-|x - c|^2 / 2 s^2) cos(omega t + phase).
struct GaussianField {
  int n = 1;
  double amplitude = 1.0;
  double sigma = 1.0;
  double omega = 0.0;
  double phase = 0.0;
  std::array<double, kMaxDim> center{};

  double value(const PhasePoint& p) const;
  PhaseFunction function() const;
};

/// Default smooth test data used by the checks below.
GaussianPacket default_test_packet(int n);
GaussianField default_test_field(int n);

/// Deterministic sample points with t in [2, 3], |x^k| <= 1, |v^k| <= 1.
std::vector<PhasePoint> sample_phase_points(int n, int count, std::uint64_t seed);

/// Tensor trapezoid rule on [-vmax, vmax]^n.
struct VelocityQuadrature {
  int n = 1;
  std::vector<std::array<double, kMaxDim>> nodes;
  std::vector<double> weights;

  static VelocityQuadrature uniform(int n, double vmax, int cells_per_dim);
  double integrate(const std::function<double(const std::array<double, kMaxDim>&)>& g) const;
};

/// sup |T Zhat_a f - Zhat_a T f| over the points.
double free_transport_commutation_residual(int id, int n, const PhaseFunction& f,
                                           const std::vector<PhasePoint>& points, double h);

/// sup |d_{v^i} f - (1/v^0)(Omegahat_{0i} f - (t d_{x^i} + x^i d_t) f)| with the
/// left side exact and the right side by finite differences.
double momentum_decomposition_residual(int i, const GaussianPacket& f, const std::vector<PhasePoint>& points,
                                       double h);

/// sup |[T_phi, Zhat_A] f - sum Q d_mu(Z_B phi) Zhat_C f| over the points.
double commuted_vlasov_residual(const CommutedVlasovRHS& rhs, const PhaseFunction& phi, const PhaseFunction& f,
                                const std::vector<PhasePoint>& points, double h);

/// Z_a int f / (v^0)^k dv against int (1/(v^0)^k) Zhat_a f dv plus the
/// (1 - k) int v^i / (v^0)^{k+1} f dv correction for boosts. Sup over points.
double moment_exchange_residual(int id, int n, int k, const PhaseFunction& f, const VelocityQuadrature& vq,
                                const std::vector<PhasePoint>& points, double h);

/// Z_A int f dv against sum int P^B Zhat_B f dv from derive_commuted_kg.
double commuted_kg_residual(const CommutedKGRHS& rhs, const PhaseFunction& f, const VelocityQuadrature& vq,
                            const std::vector<PhasePoint>& points, double h);

/// Successive ratios r[k] = e[k] / e[k+1] of a refinement sequence.
std::vector<double> richardson_ratios(const std::vector<double>& errors);

}  // namespace vkg
