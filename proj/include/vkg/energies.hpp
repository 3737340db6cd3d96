#pragma once

#include <array>
#include <span>
#include <vector>

#include "vkg/closed_form.hpp"
#include "vkg/slices.hpp"

namespace vkg {

/// e_hat(f) = int (v^0 t - v.x) / tau f dv on a velocity quadrature. When
/// `truncated` is given it is set if |f| on the velocity boundary exceeds
/// 1e-14 times its maximum.
double vlasov_energy_density(std::span<const double> f, const VelocityQuadrature& vq, double t,
                             std::span<const double> x, double tau, bool* truncated = nullptr);

/// Same density from the moments mw = int v^0 f dv and mv = int v f dv.
double vlasov_energy_density_from_moments(double mw, std::span<const double> mv, double t,
                                          std::span<const double> x, double tau);

/// e(phi) = (t / 2 tau)(dt_phi^2 + |grad phi|^2 + phi^2) + (1 / tau) dt_phi (x . grad phi).
double kg_energy_density(double phi, double dt_phi, std::span<const double> grad, double t,
                         std::span<const double> x, double tau);

struct DensitySample {
  double t = 0.0;
  double r = 0.0;
  double tau = 1.0;
  double ehat = 0.0;
  double e_kg = 0.0;
  double m0 = 0.0;    // int |f| dv
  double minv = 0.0;  // int |f| / v0 dv
  double mw = 0.0;    // int v0 |f| dv
  double phi = 0.0;
  double dphi_sq = 0.0;  // dt_phi^2 + |grad phi|^2
};

DensitySample density_sample(const SliceSample& s, const DiagLayout& layout, int word, std::size_t node);

struct WordEnergy {
  MultiIndex word;
  double ehat = 0.0;    // int e_hat(|Zhat_A f|)
  double ehat_w = 0.0;  // int e_hat(v0 |Zhat_A f|)
  double e_phi = 0.0;   // int e(Z_A phi)
};

struct EnergyReport {
  double tau = 1.0;
  int order = 0;
  std::vector<WordEnergy> words;
  std::vector<double> e_phi;   // E_N(phi), N = 0..order
  std::vector<double> ehat;    // Ehat_N(f)
  std::vector<double> ehat1;   // Ehat_{N,1}(f)
  double truncation_f = 0.0;   // share of Ehat_0 carried by the outer tenth of the slice
  double truncation_phi = 0.0;
};

EnergyReport energy_report(const SliceSample& s, const DiagLayout& layout);

double E_N_phi(const EnergyReport& r, int order);
double Ehat_N_f(const EnergyReport& r, int order);
double Ehat_N1_f(const EnergyReport& r, int order);

struct LowerBoundCheck {
  std::size_t checks = 0;
  std::array<std::size_t, 4> violations{};  // three Vlasov bounds, then the KG bound
  std::array<double, 4> min_slack{1e300, 1e300, 1e300, 1e300};
  bool ok() const { return violations[0] + violations[1] + violations[2] + violations[3] == 0; }
};

/// Every word, every node. Slack is considered nonnegative down to a relative
/// rounding tolerance of 1e-12 of the density.
LowerBoundCheck check_lower_bounds(const SliceSample& s, const DiagLayout& layout);

struct BalanceResult {
  double energy_before = 0.0;
  double energy_after = 0.0;
  double bulk = 0.0;
  double value = 0.0;  // residual (KG) or slack (Vlasov)
};

/// E(tau2) - E(tau1) + int int h d_t(Z_A phi) for the word A.
BalanceResult kg_energy_identity_residual(const SliceSample& s1, const SliceSample& s2, const DiagLayout& layout,
                                          int word);
/// Ehat(tau1) + int int (|h_A| + |grad phi||Zhat_A f|) - Ehat(tau2), for a balance word.
BalanceResult vlasov_energy_inequality_check(const SliceSample& s1, const SliceSample& s2,
                                             const DiagLayout& layout, int word);

}  // namespace vkg
