#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace vkg {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Mode { Coupled, FreeTransport, FreeKG, Mms };
enum class PhiBoundary { Outgoing, Periodic };
enum class DeltaRule { Zero, N4 };

struct SimConfig {
  int n = 1;
  Mode mode = Mode::Coupled;

  double x_extent = 72.0;
  int x_nodes = 1441;
  double v_extent = 4.0;
  int v_nodes = 81;

  double dt = 0.0;  // 0: derived from cfl
  double cfl = 0.5;
  double t_start = 0.0;
  double t_end = 0.0;  // 0: just long enough to cover every slice

  double epsilon = 1e-3;
  double f_amplitude = 1.0;
  double f_sigma_x = 2.0;
  double f_sigma_v = 0.3;
  double f_center_x = 0.0;
  double f_center_v = 0.0;
  double phi_amplitude = 1.0;
  double phi_sigma = 3.0;
  double phi_center_x = 0.0;
  double pi_amplitude = 0.0;
  int plane_wave_mode = 0;  // > 0: phi = cos(k x) standing wave (periodic tests)
  bool limiter = true;

  std::vector<double> slices{1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0, 18.0, 20.0};
  double slice_rmax = 40.0;
  int slice_resolution = 0;  // 0: match the spatial grid
  int slice_angular = 0;

  int diag_order = 2;
  int balance_order = 1;
  double diag_interval = 0.1;
  double series_interval = 0.5;
  int history_depth = 4;

  int threads = 0;
  DeltaRule delta_rule = DeltaRule::Zero;
  double ratio_factor = 5.0;
  PhiBoundary phi_boundary = PhiBoundary::Outgoing;
  double boundary_floor = 1e-10;

  std::string output_dir = "vkg_out";
  bool write_raw = false;
  bool plots = true;

  double dx() const;
  double dv() const;
  double delta() const;
};

/// Parse flat `key = value` text. `schema = 1` is required; unknown keys are
/// errors. Values of VKG_<KEY> environment variables override the file when
/// `use_env` is set.
SimConfig parse_config(const std::string& text, bool use_env = true);
SimConfig load_config(const std::string& path, bool use_env = true);

/// Apply one key; throws ConfigError on unknown keys or bad values.
void set_config_value(SimConfig& c, const std::string& key, const std::string& value);

/// Cross-field checks (grid parity, CFL inputs, slice ordering).
void validate(const SimConfig& c);

/// Canonical `key = value` listing in a fixed order.
std::string to_text(const SimConfig& c);
std::vector<std::pair<std::string, std::string>> config_entries(const SimConfig& c);

std::string mode_name(Mode m);

}  // namespace vkg
