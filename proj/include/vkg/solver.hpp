#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vkg/config.hpp"
#include "vkg/grid.hpp"
#include "vkg/profiles.hpp"
#include "vkg/slices.hpp"

namespace vkg {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Positive flux-conservative semi-Lagrangian update of one line of node
/// values shifted by alpha cells (|alpha| <= 1), zero inflow. `fmax` bounds the
/// limiter from above (use infinity to disable). Returns the mass that left.
double pfc_advect_line(std::vector<double>& u, double alpha, double fmax, bool limiter);

PhaseGrid make_grid(const SimConfig& c);
double choose_dt(const SimConfig& c);

class Solver {
 public:
  explicit Solver(const SimConfig& c);

  const SimConfig& config() const { return config_; }
  const PhaseGrid& grid() const { return grid_; }
  double dt() const { return dt_; }
  double time() const { return field_.t; }
  long step_count() const { return steps_; }
  const PhaseState& phase() const { return phase_; }
  const FieldState& field() const { return field_; }
  void set_state(PhaseState p, FieldState f);

  /// One Strang step: X(dt/2), [source], KG leapfrog, V(dt), [source], X(dt/2).
  void step();

  /// Mass carried out through the box faces (x and v) so far.
  double outflow() const { return outflow_; }
  double f_sup0() const { return f_sup0_; }
  double mass0() const { return mass0_; }

 private:
  void advect_x(double tau);
  void kick_v(const std::vector<double>& phi, double tau);
  void kg_update(const std::vector<double>& rho, double t_mid);
  void add_source(double t_eval, double tau);

  SimConfig config_;
  PhaseGrid grid_;
  double dt_ = 0.0;
  double t0_ = 0.0;
  long steps_ = 0;
  PhaseState phase_;
  FieldState field_;
  double f_sup0_ = 0.0;
  double mass0_ = 0.0;
  double outflow_ = 0.0;
  std::optional<ClosedFormPair> mms_;
  std::optional<MmsForcing> forcing_;
};

/// Free-function form of one step.
std::pair<PhaseState, FieldState> step(const SimConfig& c, const PhaseState& p, const FieldState& f);

struct SeriesRow {
  double t = 0.0;
  double mass = 0.0;
  double f_min = 0.0;
  double f_max = 0.0;
  double sup_phi = 0.0;
  double sup_dphi = 0.0;
  double boundary_phi = 0.0;
  double boundary_f = 0.0;
  double v_edge_f = 0.0;
  double outflow = 0.0;
};

struct RunFlags {
  bool boundary_contaminated = false;
  bool velocity_truncated = false;
  double max_boundary_phi = 0.0;
  double max_boundary_f = 0.0;
  double max_v_edge_f = 0.0;
};

struct RunArtifacts {
  SimConfig config;
  PhaseGrid grid;
  DiagLayout layout;
  double dt = 0.0;
  long steps = 0;
  double t_final = 0.0;
  double mass0 = 0.0;
  double f_sup0 = 0.0;
  std::vector<SeriesRow> series;
  std::vector<SliceSample> slices;
  RunFlags flags;
  PhaseState final_phase;
  FieldState final_field;
};

struct RunOptions {
  bool keep_final_state = false;
  std::function<void(const SeriesRow&)> on_series;
};

/// Time needed so that every configured slice is covered by the history.
double required_end_time(const SimConfig& c);

RunArtifacts run(const SimConfig& c, const RunOptions& options = {});

}  // namespace vkg
