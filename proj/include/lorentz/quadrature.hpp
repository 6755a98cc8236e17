#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lorentz::quad {

using Complex = std::complex<double>;
using Integrand = std::function<Complex(double)>;

struct QuadConfig {
  double abs_tol = 1e-6;
  double rel_tol = 1e-6;
  int max_subdivisions = 20000;
  /// Damping parameters for the e^{-eps x^2} prescription, strictly decreasing.
  std::vector<double> epsilon_schedule = geometric_schedule(0.1, 8);
  /// Polynomial degree used when extrapolating eps -> 0.
  int extrapolation_order = 4;

  /// eps_j = eps0 * ratio^j, j = 0..count-1.
  static std::vector<double> geometric_schedule(double eps0, int count, double ratio = 0.5);

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;

  /// True when `error` meets max(abs_tol, rel_tol * |value|).
  bool within_tolerance(Complex value, double error) const;
};

struct QuadResult {
  Complex value{};
  double error_estimate = 0.0;
  bool converged = true;
  long evaluations = 0;
};

/// Sum of results; errors add, convergence requires both.
QuadResult combine(const QuadResult& a, const QuadResult& b);

/// Integrable endpoint singularities declared by the caller. The panel next
/// to a declared endpoint is integrated after a polynomial change of
/// variables that flattens the singularity.
struct Endpoints {
  bool left_singular = false;
  bool right_singular = false;
};

/// Adaptive 21-point Gauss-Kronrod quadrature on [a, b], globally bisecting
/// the interval with the largest error. `breakpoints` inside (a, b) seed the
/// initial partition (kinks, support edges, known singular points).
QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg,
                            Endpoints ends = {}, std::span<const double> breakpoints = {});

struct DampedOptions {
  /// Bound on |f(x)| used to place the truncation point. When empty, the
  /// maximum of |f| sampled on a coarse grid is used.
  std::function<double(double)> envelope;
  /// f vanishes for x > support. The eps -> 0 limit is then the plain finite
  /// integral, which is evaluated directly.
  std::optional<double> support;
  bool left_singular = false;
  std::vector<double> breakpoints;
  /// Width of the initial panels on the truncated range.
  double panel_width = 0.5;
};

struct Extrapolation {
  Complex value;
  double residual;
};

/// Polynomial extrapolation in eps to eps = 0 using the last order+1 samples
/// (the smallest eps). Residual is |P_order(0) - P_{order-1}(0)|.
Extrapolation extrapolate_to_zero(std::span<const std::pair<double, Complex>> samples, int order);

/// Lagrange weights w_i with P(0) = sum_i w_i v_i for the given nodes.
std::vector<double> extrapolation_weights(std::span<const double> eps);

/// lim_{eps->0} int_0^inf e^{-eps x^2} f(x) dx, evaluated on the schedule in
/// `cfg` and extrapolated.
QuadResult integrate_semiinfinite_damped(const Integrand& f, const QuadConfig& cfg,
                                         const DampedOptions& opts = {});

/// Truncation point X with e^{-eps X^2} * envelope < abs_tol / 10.
double truncation_point(const Integrand& f, double eps, const QuadConfig& cfg, const DampedOptions& opts);

} // namespace lorentz::quad
