#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vkg/diagnostics.hpp"
#include "vkg/energies.hpp"
#include "vkg/solver.hpp"

namespace vkg {

struct BalanceRecord {
  std::string kind;  // "kg" or "vlasov"
  double tau1 = 0.0;
  double tau2 = 0.0;
  std::string word;
  BalanceResult result;
};

struct MonitorResult {
  std::string name;
  bool pass = true;
  double value = 0.0;
  double threshold = 0.0;
  std::string detail;
};

/// Everything computed from a finished run; pure function of the artifacts.
struct RunAnalysis {
  std::vector<EnergyReport> reports;
  LowerBoundCheck lower_bounds;
  std::vector<BalanceRecord> balances;
  std::vector<InequalityRecord> ks_f0, ks_f1, ks_phi, ks_dphi, l2;
  RatioVariation var_f0, var_f1, var_phi, var_dphi, var_l2;
  BootstrapStatus bootstrap;
  double mass_drift_rate = 0.0;   // |mass - mass0| / mass0 per unit time, worst over the series
  double positivity = 0.0;        // min f / sup f0
  double kg_energy_variation = 0.0;  // max |E_0(phi) - E_0(phi)(tau_0)| / E_0(phi)(tau_0)
  double min_vlasov_slack = 0.0;
  std::optional<DecayFit> sup_phi_decay;
  std::vector<MonitorResult> monitors;

  bool all_pass() const;
};

RunAnalysis analyze_run(const RunArtifacts& a, const BootstrapFault& fault = {});

}  // namespace vkg
