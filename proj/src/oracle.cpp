#include "lorentz/oracle.hpp"

#include "lorentz/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lorentz::oracle {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

using specfun::Order;

QuadConfig inner_config(const QuadConfig& cfg) {
  QuadConfig c = cfg;
  c.abs_tol = cfg.abs_tol * 1e-3;
  c.rel_tol = cfg.rel_tol * 1e-3;
  return c;
}

// int_0^{pi/2} cos(b cos th) dth
QuadResult theta_integral(double b, const QuadConfig& cfg) {
  return quad::integrate_finite([b](double th) { return Complex(std::cos(b * std::cos(th))); }, 0.0, 0.5 * pi, cfg);
}

QuadResult damped_in_y(const quad::Integrand& f, const QuadConfig& cfg, double a, bool left_singular,
                       std::function<double(double)> envelope) {
  QuadConfig c = cfg;
  const double eps0 = std::min(cfg.epsilon_schedule.front(), a * a / 80.0);
  const double scale = eps0 / cfg.epsilon_schedule.front();
  for (double& e : c.epsilon_schedule) e *= scale;
  quad::DampedOptions opts;
  opts.left_singular = left_singular;
  opts.envelope = std::move(envelope);
  opts.panel_width = std::min(0.5, 1.0 / a);
  return quad::integrate_semiinfinite_damped(f, c, opts);
}

} // namespace

const std::vector<AngularIdentity>& all_identities() {
  static const std::vector<AngularIdentity> ids{
      AngularIdentity::cosh_to_N0,       AngularIdentity::sinh_to_K0,  AngularIdentity::theta_to_J0_half,
      AngularIdentity::theta_to_J0_full, AngularIdentity::sinh_J0_exp, AngularIdentity::cosh_J0_cos};
  return ids;
}

const char* to_string(AngularIdentity id) {
  switch (id) {
    case AngularIdentity::cosh_to_N0: return "cosh_to_N0";
    case AngularIdentity::sinh_to_K0: return "sinh_to_K0";
    case AngularIdentity::theta_to_J0_half: return "theta_to_J0_half";
    case AngularIdentity::theta_to_J0_full: return "theta_to_J0_full";
    case AngularIdentity::sinh_J0_exp: return "sinh_J0_exp";
    case AngularIdentity::cosh_J0_cos: return "cosh_J0_cos";
  }
  return "?";
}

AngularCheck check_angular_identity(AngularIdentity id, double a, const QuadConfig& cfg) {
  if (!(a >= 0.2 && a <= 10.0)) throw std::domain_error("check_angular_identity: a must lie in [0.2, 10]");
  cfg.validate();
  const Order zero = Order::integer(0);
  QuadResult lhs;
  double rhs = 0.0;
  switch (id) {
    case AngularIdentity::cosh_to_N0: {
      // x = cosh psi = 1 + y
      auto f = [a](double y) { return Complex(2.0 * std::cos(a * (1.0 + y)) / std::sqrt(y * (y + 2.0))); };
      lhs = damped_in_y(f, cfg, a, true, [](double y) { return 2.0 / std::sqrt(y * (y + 2.0)); });
      rhs = -pi * specfun::bessel_n(zero, a);
      break;
    }
    case AngularIdentity::sinh_to_K0: {
      auto f = [a](double y) { return Complex(2.0 * std::cos(a * y) / std::sqrt(1.0 + y * y)); };
      lhs = damped_in_y(f, cfg, a, false, [](double y) { return 2.0 / std::sqrt(1.0 + y * y); });
      rhs = 2.0 * specfun::bessel_k(zero, a);
      break;
    }
    case AngularIdentity::theta_to_J0_half:
      lhs = theta_integral(a, cfg);
      rhs = 0.5 * pi * specfun::bessel_j(zero, a);
      break;
    case AngularIdentity::theta_to_J0_full:
      lhs = quad::integrate_finite([a](double th) { return Complex(std::cos(a * std::cos(th))); }, -0.5 * pi, 0.5 * pi,
                                   cfg);
      rhs = pi * specfun::bessel_j(zero, a);
      break;
    case AngularIdentity::sinh_J0_exp: {
      // y = sinh psi
      const QuadConfig ic = inner_config(cfg);
      bool inner_ok = true;
      auto f = [a, &ic, &inner_ok](double y) {
        const QuadResult t = theta_integral(a * y, ic);
        inner_ok = inner_ok && t.converged;
        return 4.0 * y / std::sqrt(1.0 + y * y) * t.value;
      };
      lhs = damped_in_y(f, cfg, a, false, [a](double y) {
        return 4.0 * 0.5 * pi * std::min(1.0, std::sqrt(2.0 / (pi * a * std::max(y, 1e-300))));
      });
      lhs.converged = lhs.converged && inner_ok;
      rhs = 2.0 * pi / a * std::exp(-a);
      break;
    }
    case AngularIdentity::cosh_J0_cos: {
      // x = cosh psi = 1 + y
      const QuadConfig ic = inner_config(cfg);
      bool inner_ok = true;
      auto f = [a, &ic, &inner_ok](double y) {
        const double x = 1.0 + y;
        const QuadResult t = theta_integral(a * x, ic);
        inner_ok = inner_ok && t.converged;
        return x / std::sqrt(y * (y + 2.0)) * t.value;
      };
      lhs = damped_in_y(f, cfg, a, true, [a](double y) {
        const double x = 1.0 + y;
        return x / std::sqrt(y * (y + 2.0)) * 0.5 * pi * std::min(1.0, std::sqrt(2.0 / (pi * a * x)));
      });
      lhs.converged = lhs.converged && inner_ok;
      rhs = 0.5 * pi / a * std::cos(a);
      break;
    }
  }
  const double l = lhs.value.real();
  return {l, rhs, std::fabs(l - rhs), lhs.error_estimate, lhs.converged};
}

double WindowConfig::box_halfwidth(double eta) const {
  if (!(eta > 0)) throw std::domain_error("box_halfwidth: eta must be > 0");
  return std::sqrt(std::log(1.0 / window_floor) / eta);
}

void WindowConfig::validate() const {
  if (eta_schedule.empty()) throw std::invalid_argument("WindowConfig: empty eta schedule");
  for (std::size_t i = 0; i < eta_schedule.size(); ++i) {
    if (!(eta_schedule[i] > 0)) throw std::invalid_argument("WindowConfig: eta must be > 0");
    if (i > 0 && !(eta_schedule[i] < eta_schedule[i - 1]))
      throw std::invalid_argument("WindowConfig: eta schedule must be strictly decreasing");
  }
  if (extrapolation_order < 0 || extrapolation_order + 1 > static_cast<int>(eta_schedule.size()))
    throw std::invalid_argument("WindowConfig: extrapolation order needs order+1 samples");
  if (!(window_floor > 0 && window_floor < 1)) throw std::invalid_argument("WindowConfig: window_floor in (0, 1)");
  if (!(abs_tol > 0 && rel_tol > 0)) throw std::invalid_argument("WindowConfig: tolerances must be > 0");
  for (double p : panel_width)
    if (!(p >= 0)) throw std::invalid_argument("WindowConfig: panel widths must be >= 0");
}

WindowConfig coarse_window() {
  WindowConfig w;
  w.eta_schedule = QuadConfig::geometric_schedule(0.05, 5);
  w.extrapolation_order = 3;
  w.window_floor = 1e-10;
  w.panel_width = {0.5, 0.0, 0.0};
  w.target_rel = 1e-3;
  w.target_abs = 1e-5;
  return w;
}

namespace {

// Mean of the lower-level error estimates over all nodes; times the range it
// approximates the integral of the pointwise error.
struct ErrorMean {
  double sum = 0.0;
  long count = 0;
  void add(double e) {
    sum += e;
    ++count;
  }
  double mean() const { return count ? sum / count : 0.0; }
};

// Nested one-dimensional passes. Every level integrates over [0, L] of the
// current axis, cut at the points where the region seen by the levels below
// changes shape.
class Cartesian {
public:
  Cartesian(const RadialProfile& f, const WindowConfig& w, double eta)
      : f_(f), w_(w), eta_(eta), L_(w.box_halfwidth(eta)) {
    cfg_.abs_tol = w.abs_tol;
    cfg_.rel_tol = w.rel_tol;
    cfg_.max_subdivisions = w.max_subdivisions;
    levels_.push_back(f.support ? *f.support * *f.support : -1.0);
    for (double b : f.breakpoints)
      if (b > 0) levels_.push_back(b * b);
  }

  double halfwidth() const { return L_; }
  long evaluations() const { return evaluations_; }

  Complex profile(double sigma) const {
    return sigma >= 0 ? f_.timelike(std::sqrt(sigma)) : f_.spacelike(std::sqrt(-sigma));
  }

  // int_0^L f(c + s v^2) e^{-eta v^2} dv, s = +-1.
  QuadResult inner(double c, int s, double panel) {
    double lo = 0.0, hi = L_;
    if (f_.support) {
      const double S2 = *f_.support * *f_.support;
      // |c + s v^2| < S2  <=>  v^2 in the interval below
      const double a = s * (-S2 - c), b = s * (S2 - c);
      const double v2lo = std::min(a, b), v2hi = std::max(a, b);
      if (v2hi <= 0) return {};
      lo = v2lo > 0 ? std::sqrt(v2lo) : 0.0;
      hi = std::min(hi, std::sqrt(v2hi));
      if (!(lo < hi)) return {};
    }
    std::vector<double> cuts{lo, hi};
    auto add = [&](double sigma) {
      const double v2 = s * (sigma - c);
      if (v2 > 0) {
        const double v = std::sqrt(v2);
        if (v > lo && v < hi) cuts.push_back(v);
      }
    };
    add(0.0);
    for (double t : levels_)
      if (t > 0) {
        add(t);
        add(-t);
      }
    const auto g = [this, c, s](double v) { return profile(c + s * v * v) * std::exp(-eta_ * v * v); };
    return segments(g, cuts, panel, true);
  }

  // 1+1: momentum along t integrates x innermost, along x integrates t.
  QuadResult slice_1p1(double u, bool timelike) {
    return timelike ? inner(u * u, -1, w_.panel_width[1]) : inner(-u * u, +1, w_.panel_width[1]);
  }

  // 1+2: c = t^2 - x^2 with the middle variable m; y is innermost.
  QuadResult slice_1p2(double u, bool timelike) {
    // timelike: u = t, m = x, c = u^2 - m^2;  spacelike: u = x, m = t, c = m^2 - u^2
    const int sm = timelike ? -1 : +1;
    const double c0 = timelike ? u * u : -u * u;
    std::vector<double> cuts{0.0, L_};
    auto add = [&](double sigma) {
      const double m2 = sm * (sigma - c0);
      if (m2 > 0) {
        const double m = std::sqrt(m2);
        if (m < L_) cuts.push_back(m);
      }
    };
    add(0.0);
    for (double t : levels_)
      if (t > 0) {
        add(t);
        add(-t);
      }
    double lo = 0.0, hi = L_;
    if (f_.support) {
      const double S2 = *f_.support * *f_.support;
      // the y-range is empty unless c + S2 > 0
      if (timelike) {
        hi = std::min(hi, std::sqrt(u * u + S2));
      } else {
        const double m2 = u * u - S2;
        if (m2 > 0) lo = std::sqrt(m2);
      }
    }
    if (!(lo < hi)) return {};
    std::erase_if(cuts, [&](double m) { return m < lo || m > hi; });
    cuts.push_back(lo);
    cuts.push_back(hi);
    ErrorMean inner_err;
    bool ok = true;
    const auto g = [&](double m) {
      const QuadResult r = inner(c0 + sm * m * m, -1, w_.panel_width[2]);
      inner_err.add(r.error_estimate);
      ok = ok && r.converged;
      return r.value * std::exp(-eta_ * m * m);
    };
    QuadResult r = segments(g, cuts, w_.panel_width[1], true);
    r.error_estimate += inner_err.mean() * (hi - lo);
    r.converged = r.converged && ok;
    return r;
  }

  // 2^{d} int_0^L cos(2 pi k u) e^{-eta u^2} slice(u) du, d = dimension.
  QuadResult outer(double k, bool timelike, int dim) {
    std::vector<double> cuts{0.0, L_};
    for (double t : levels_)
      if (t > 0 && std::sqrt(t) < L_) cuts.push_back(std::sqrt(t));
    ErrorMean slice_err;
    bool ok = true;
    const auto g = [&](double u) {
      const QuadResult r = dim == 2 ? slice_1p1(u, timelike) : slice_1p2(u, timelike);
      slice_err.add(r.error_estimate);
      ok = ok && r.converged;
      return r.value * (std::cos(2.0 * pi * k * u) * std::exp(-eta_ * u * u));
    };
    QuadResult r = segments(g, cuts, w_.panel_width[0], false);
    r.error_estimate += slice_err.mean() * L_;
    r.converged = r.converged && ok;
    const double factor = std::ldexp(1.0, dim);
    r.value *= factor;
    r.error_estimate *= factor;
    return r;
  }

private:
  QuadResult segments(const quad::Integrand& g, std::vector<double> cuts, double panel, bool singular_ends) {
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    QuadResult total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double a = cuts[i], b = cuts[i + 1];
      if (!(b > a)) continue;
      std::vector<double> seeds;
      if (panel > 0) {
        const int count = static_cast<int>(std::ceil((b - a) / panel));
        for (int j = 1; j < count; ++j) seeds.push_back(a + (b - a) * j / count);
      }
      const quad::Endpoints ends{singular_ends, singular_ends};
      total = quad::combine(total, quad::integrate_finite(g, a, b, cfg_, ends, seeds));
    }
    evaluations_ += total.evaluations;
    return total;
  }

  const RadialProfile& f_;
  const WindowConfig& w_;
  double eta_;
  double L_;
  QuadConfig cfg_;
  std::vector<double> levels_;
  long evaluations_ = 0;
};

CartesianResult windowed(const RadialProfile& f, const MomentumMagnitude& k, const WindowConfig& w, int dim) {
  w.validate();
  f.validate();
  const bool timelike = k.character() == Character::timelike;
  CartesianResult out;
  bool ok = true;
  for (double eta : w.eta_schedule) {
    Cartesian c(f, w, eta);
    const QuadResult r = c.outer(k.value(), timelike, dim);
    ok = ok && r.converged && std::isfinite(r.value.real()) && std::isfinite(r.value.imag());
    out.samples.push_back({eta, r.value, r.error_estimate});
    out.result.evaluations += c.evaluations();
  }
  std::vector<std::pair<double, Complex>> pts;
  std::vector<double> etas;
  for (const auto& s : out.samples) pts.emplace_back(s.eta, s.value);
  const int order = w.extrapolation_order;
  const quad::Extrapolation ex = quad::extrapolate_to_zero(pts, order);
  const std::size_t first = pts.size() - static_cast<std::size_t>(order) - 1;
  for (std::size_t i = first; i < pts.size(); ++i) etas.push_back(pts[i].first);
  const std::vector<double> weights = quad::extrapolation_weights(etas);
  double err = ex.residual;
  for (std::size_t i = 0; i < weights.size(); ++i) err += std::fabs(weights[i]) * out.samples[first + i].error;
  out.result.value = ex.value;
  out.result.error_estimate = err;
  out.result.converged = ok && std::isfinite(err) && err <= std::max(w.target_rel * std::abs(ex.value), w.target_abs);
  if (pts.size() > static_cast<std::size_t>(order) + 1) {
    pts.pop_back();
    out.without_last = quad::extrapolate_to_zero(pts, order).value;
  } else {
    out.without_last = ex.value;
  }
  return out;
}

} // namespace

CartesianResult cartesian_ft_1p1(const RadialProfile& f, const MomentumMagnitude& k, const WindowConfig& w) {
  return windowed(f, k, w, 2);
}

CartesianResult cartesian_ft_1p2(const RadialProfile& f, const MomentumMagnitude& k, const WindowConfig& w) {
  return windowed(f, k, w, 3);
}

} // namespace lorentz::oracle
