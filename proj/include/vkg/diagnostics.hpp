#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vkg/energies.hpp"
#include "vkg/slices.hpp"

namespace vkg {

struct InequalityRecord {
  std::string name;
  double tau = 0.0;
  double lhs = 0.0;       // at the worst node
  double envelope = 0.0;  // right-hand side at the worst node
  double ratio = 0.0;
  std::vector<double> where;  // y of the worst node
  double where_t = 0.0;
  bool vacuous = false;
};

/// sup over the slice of int |f| / (v0)^k dv * t^{n-1+k} tau^{1-k} / Ehat_n(f).
InequalityRecord ks_check_f(const SliceSample& s, const DiagLayout& layout, const EnergyReport& e, int k);
/// |phi| t^{n/2} / E^{1/2}_{n/2+1}(phi), and for the derivative |d phi| t^{n/2-1} tau / E^{1/2}.
InequalityRecord ks_check_phi(const SliceSample& s, const DiagLayout& layout, const EnergyReport& e);
InequalityRecord ks_check_dphi(const SliceSample& s, const DiagLayout& layout, const EnergyReport& e);

/// int (t / tau)(int |Zhat_A f| dv)^2 dmu, reported as lhs and as ratio lhs tau^{n - 2 delta} / eps^2.
InequalityRecord l2_estimate_check(const SliceSample& s, const DiagLayout& layout, int word, double epsilon,
                                   double delta);

struct RatioVariation {
  std::size_t count = 0;
  double min = 0.0;
  double max = 0.0;
  double factor = 0.0;  // max / min
  bool bounded(double limit) const { return count > 0 && factor < limit; }
};

/// Variation of the per-slice ratios over tau in [tau_lo, tau_hi], vacuous records skipped.
RatioVariation ratio_variation(const std::vector<InequalityRecord>& records, double tau_lo, double tau_hi);

struct BootstrapFault {
  int slice = -1;        // slice index whose field energy is scaled
  double factor = 2.0;
};

struct BootstrapSlice {
  double tau = 0.0;
  double margin_phi = 0.0;  // E_N(phi) / (2 eps)
  double margin_f = 0.0;    // Ehat_{N,1}(f) / (2 eps tau^delta)
  bool crossed = false;
};

struct BootstrapStatus {
  std::vector<BootstrapSlice> slices;
  std::optional<double> first_crossing;
  double max_margin_phi = 0.0;
  double max_margin_f = 0.0;
};

BootstrapStatus bootstrap_monitor(const std::vector<EnergyReport>& reports, int order, double epsilon, double delta,
                                  const BootstrapFault& fault = {});

struct DecayFit {
  std::vector<std::pair<double, double>> series;  // points used
  double window_lo = 0.0;
  double window_hi = 0.0;
  double exponent = 0.0;
  double intercept = 0.0;  // log prefactor
  double stderr_exponent = 0.0;
  double residual = 0.0;   // rms of log residuals
};

/// Least squares of log(value) against log(time) over points with time in [lo, hi].
/// Throws std::invalid_argument on nonpositive values or fewer than 5 points.
DecayFit decay_fit(const std::vector<std::pair<double, double>>& series, double lo, double hi);

}  // namespace vkg
