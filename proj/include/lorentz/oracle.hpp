#pragma once

#include "lorentz/transform.hpp"

#include <array>
#include <string>
#include <vector>

namespace lorentz::oracle {

enum class AngularIdentity {
  cosh_to_N0,        // int_R cos(a cosh psi) dpsi = -pi N_0(a)
  sinh_to_K0,        // int_R cos(a sinh psi) dpsi = 2 K_0(a)
  theta_to_J0_half,  // int_0^{pi/2} cos(a cos th) dth = (pi/2) J_0(a)
  theta_to_J0_full,  // int_{-pi/2}^{pi/2} cos(a cos th) dth = pi J_0(a)
  sinh_J0_exp,       // 4 int_0^inf sinh psi int_0^{pi/2} cos(a sinh psi cos th) = (2 pi / a) e^{-a}
  cosh_J0_cos,       // int_0^inf cosh psi int_0^{pi/2} cos(a cosh psi cos th) = (pi / 2a) cos a
};

const std::vector<AngularIdentity>& all_identities();
const char* to_string(AngularIdentity id);

struct AngularCheck {
  double lhs;
  double rhs;
  double gap;
  double error_estimate;
  bool converged;
};

/// lhs by quadrature over the angles (damped over the noncompact one), rhs
/// from specfun. Requires a in [0.2, 10]. The damping schedule is
/// cfg.epsilon_schedule rescaled so that it starts at min(eps0, a^2/80):
/// the Gaussian damping leaks e^{-a^2/(4 eps)} into the limit otherwise.
AngularCheck check_angular_identity(AngularIdentity id, double a, const QuadConfig& cfg = {});

/// Euclidean window e^{-eta |x|^2} over a truncated box, then eta -> 0.
struct WindowConfig {
  /// Strictly decreasing.
  std::vector<double> eta_schedule = QuadConfig::geometric_schedule(0.05, 6);
  int extrapolation_order = 4;
  /// Box halfwidth L(eta) = sqrt(ln(1/window_floor) / eta), where the window
  /// has dropped to window_floor.
  double window_floor = 1e-12;
  /// Initial panel width along each axis (t, x, y); the adaptive rule refines
  /// from there.
  std::array<double, 3> panel_width{0.5, 0.5, 0.5};
  /// Tolerance per one-dimensional pass.
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  int max_subdivisions = 4000;
  /// The extrapolated value counts as converged when its error estimate is
  /// below max(target_rel |value|, target_abs).
  double target_rel = 1e-4;
  double target_abs = 1e-6;

  double box_halfwidth(double eta) const;
  /// Throws std::invalid_argument on a malformed schedule.
  void validate() const;
};

/// Accuracy-for-time settings used for the 1+2 oracle.
WindowConfig coarse_window();

/// One windowed value per eta, before extrapolation.
struct WindowSample {
  double eta;
  Complex value;
  double error;
};

struct CartesianResult {
  QuadResult result;
  std::vector<WindowSample> samples;
  /// Extrapolated value when the smallest eta is dropped.
  Complex without_last;
};

/// int dt dx f(t^2 - x^2) e^{-eta(t^2+x^2)} e^{-2 pi i k.(t or x)}, with the
/// momentum along t when timelike and along x when spacelike.
CartesianResult cartesian_ft_1p1(const RadialProfile& f, const MomentumMagnitude& k, const WindowConfig& w = {});

/// The same over R^{1,2}.
CartesianResult cartesian_ft_1p2(const RadialProfile& f, const MomentumMagnitude& k,
                                 const WindowConfig& w = coarse_window());

} // namespace lorentz::oracle
