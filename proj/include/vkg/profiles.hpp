#pragma once

#include <array>
#include <functional>

#include "vkg/config.hpp"
#include "vkg/grid.hpp"

namespace vkg {

using Vec2 = std::array<double, 2>;

/// Closed-form pair (phi*, f*) with the analytic derivatives the forcing needs.
/// Spatial and velocity indices are 1-based.
struct ClosedFormPair {
  int n = 1;
  std::function<double(double, const Vec2&, const Vec2&)> f;
  std::function<double(double, const Vec2&, const Vec2&)> f_t;
  std::function<double(double, const Vec2&, const Vec2&, int)> f_x;
  std::function<double(double, const Vec2&, const Vec2&, int)> f_v;
  std::function<double(double, const Vec2&)> phi;
  std::function<double(double, const Vec2&)> phi_t;
  std::function<double(double, const Vec2&)> phi_tt;
  std::function<double(double, const Vec2&, int)> phi_x;
  std::function<double(double, const Vec2&)> lap_phi;
  /// int f* dv over all of R^n.
  std::function<double(double, const Vec2&)> rho;
};

/// Forcing that makes the pair an exact solution:
/// vlasov = T_{phi*} f* (multiplied form, v^0 d_t + v.grad_x - v^0 grad phi*.grad_v),
/// kg = (box - 1) phi* - int f* dv.
struct MmsForcing {
  std::function<double(double, const Vec2&, const Vec2&)> vlasov;
  std::function<double(double, const Vec2&)> kg;
};

MmsForcing mms_forcing(const ClosedFormPair& target);

/// Smooth decaying Gaussian pair used by the convergence tests.
ClosedFormPair gaussian_mms_pair(int n);
/// f* = 0 and a plane Klein-Gordon wave: an exact free pair.
ClosedFormPair free_plane_wave_pair(int n, double k);

struct InitialData {
  PhaseState phase;
  FieldState field;
};

/// Initial data on the flat level t = t_start for the configured mode.
InitialData make_initial_data(const SimConfig& c, const PhaseGrid& g);

}  // namespace vkg
