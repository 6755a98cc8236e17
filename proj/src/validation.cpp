#include "lorentz/validation.hpp"

#include "lorentz/oracle.hpp"
#include "lorentz/profiles.hpp"
#include "lorentz/specfun.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace lorentz::validation {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

Check make_check(std::string name, Complex expected, Complex actual, double gap, double tol, bool ok = true) {
  return {std::move(name), expected, actual, gap, tol, ok && gap <= tol};
}

double relative_gap(Complex actual, Complex expected) {
  const double d = std::abs(actual - expected);
  return expected == Complex{} ? d : d / std::abs(expected);
}

template <class F>
SuiteReport timed(const char* name, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport r;
  r.suite = name;
  body(r.checks);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// The closed n = 1 and n = 2 radial integrands.
double closed_kernel(int n, Character momentum, Branch branch, double s, double l) {
  const double z = 2.0 * pi * s * l;
  const specfun::Order zero = specfun::Order::integer(0);
  const bool tb = branch == Branch::timelike_profile;
  if (n == 1) {
    const bool n0 = (momentum == Character::timelike) == tb;
    return n0 ? -2.0 * pi * s * specfun::bessel_n(zero, z) : 4.0 * s * specfun::bessel_k(zero, z);
  }
  if (momentum == Character::timelike) return tb ? -2.0 / l * s * std::sin(z) : 0.0;
  return tb ? 2.0 / l * s * std::exp(-z) : 2.0 / l * s * std::cos(z);
}

} // namespace

bool SuiteReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

double SuiteReport::max_gap() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.gap);
  return m;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"angular", "closure", "recursion", "gaussian", "reduction", "oracle"};
  return names;
}

std::vector<SuiteReport> run(const std::string& suite, const QuadConfig& cfg) {
  if (suite == "all") {
    std::vector<SuiteReport> out;
    for (const auto& s : suite_names()) out.push_back(run(s, cfg).front());
    return out;
  }
  if (suite == "angular") return {angular(cfg)};
  if (suite == "closure") return {closure(cfg)};
  if (suite == "recursion") return {recursion(cfg)};
  if (suite == "gaussian") return {gaussian(cfg)};
  if (suite == "reduction") return {reduction()};
  if (suite == "oracle") return {oracle(cfg)};
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

SuiteReport angular(const QuadConfig& cfg) {
  return timed("angular", [&](std::vector<Check>& out) {
    for (auto id : oracle::all_identities()) {
      for (double a : {0.5, 1.0, 2.0, 5.0}) {
        const auto c = oracle::check_angular_identity(id, a, cfg);
        out.push_back(make_check(std::string(oracle::to_string(id)) + fmt(" a=%g", a), c.rhs, c.lhs, c.gap, 1e-6,
                                 c.converged));
      }
    }
  });
}

QuadResult closure_integral(double k, double u, const QuadConfig& cfg) {
  if (!(k > 0) || !(u > 0)) throw std::domain_error("closure_integral: k and u must be > 0");
  // The Gaussian damping leaks e^{-a^2/(4 eps)} at the slowest frequency a.
  const double a = 2.0 * pi * std::fabs(u - k);
  QuadConfig c = cfg;
  if (a > 0) {
    const double scale = std::min(1.0, a * a / 80.0 / cfg.epsilon_schedule.front());
    for (double& e : c.epsilon_schedule) e *= scale;
  }
  quad::DampedOptions opts;
  opts.envelope = [u](double r) { return 4.0 * u * std::min(2.0 * pi * u, 1.0 / std::max(r, 1e-300)); };
  opts.panel_width = 0.25 / std::max(u, k);
  const quad::Integrand f = [k, u](double r) { return Complex(kernels::chi(1, r, k) * kernels::chi_dual(3, u, r)); };
  return quad::integrate_semiinfinite_damped(f, c, opts);
}

SuiteReport closure(const QuadConfig& cfg) {
  return timed("closure", [&](std::vector<Check>& out) {
    const double vals[] = {0.5, 1.0, 2.0};
    for (double k : vals) {
      for (double u : vals) {
        if (std::fabs(u - k) < 0.25) continue;
        const QuadResult r = closure_integral(k, u, cfg);
        const double expected = kernels::closure_rhs(1, 3, k, u);
        out.push_back(make_check(fmt("chi1*chi3 k=%g u=%g", k, u), expected, r.value, std::abs(r.value - expected),
                                 1e-3, r.converged));
      }
    }
  });
}

SuiteReport recursion(const QuadConfig& cfg) {
  return timed("recursion", [&](std::vector<Check>& out) {
    const RadialProfile p = profiles::compact_bump();
    for (int n : {1, 2}) {
      for (Character c : {Character::timelike, Character::spacelike}) {
        for (double k : {0.5, 1.0, 2.0}) {
          const MomentumMagnitude l(k, c);
          bool ok = true;
          const auto F = [&](double kk) {
            const TransformResult r = transform(n, p, MomentumMagnitude(kk, c), cfg);
            ok = ok && r.converged();
            return r.value();
          };
          const Derivative d = recursion_step(F, l);
          const TransformResult direct = transform(n + 2, p, l, cfg);
          const double gap = std::abs(d.value - direct.value());
          out.push_back(make_check("n=" + std::to_string(n) + "->" + std::to_string(n + 2) + " " + to_string(c) +
                                       fmt(" k=%g", k),
                                   direct.value(), d.value, gap, 1e-4 * (1.0 + std::abs(direct.value())),
                                   ok && direct.converged()));
        }
      }
    }
  });
}

SuiteReport gaussian(const QuadConfig& cfg) {
  return timed("gaussian", [&](std::vector<Check>& out) {
    const RadialProfile p = profiles::gauss_oscillatory();
    for (double k : {0.25, 0.5, 1.0}) {
      const TransformResult r = transform(1, p, MomentumMagnitude::timelike(k), cfg);
      const Complex ref = gaussian_reference(k);
      out.push_back(make_check(fmt("n=1 exp(i s^2) k=%g", k), ref, r.value(), relative_gap(r.value(), ref), 1e-3,
                               r.converged()));
    }
  });
}

SuiteReport reduction() {
  return timed("reduction", [&](std::vector<Check>& out) {
    std::vector<double> grid(20);
    for (int i = 0; i < 20; ++i) grid[i] = 0.05 * std::pow(100.0, i / 19.0);  // 0.05 .. 5
    const Branch branches[] = {Branch::timelike_profile, Branch::spacelike_profile};
    for (int n : {1, 2}) {
      for (Character c : {Character::timelike, Character::spacelike}) {
        for (Branch b : branches) {
          const KernelSpec spec(n, c, b);
          double worst = 0.0;
          Complex worst_expected{}, worst_actual{};
          for (double s : grid) {
            for (double lv : grid) {
              const double expected = closed_kernel(n, c, b, s, lv);
              const double actual = kernels::minkowski_kernel(spec, s, MomentumMagnitude(lv, c));
              const double gap = relative_gap(actual, expected);
              if (gap >= worst) {
                worst = gap;
                worst_expected = expected;
                worst_actual = actual;
              }
            }
          }
          const std::string name = "n=" + std::to_string(n) + " momentum=" + to_string(c) +
                                   " branch=" + (b == Branch::timelike_profile ? "timelike" : "spacelike");
          out.push_back(make_check(name, worst_expected, worst_actual, worst, 1e-10));
        }
      }
    }
    for (int n = 2; n <= kernels::max_dimension; n += 2) {
      const KernelSpec spec(n, Character::timelike, Branch::spacelike_profile);
      bool zero = true;
      double largest = 0.0;
      for (double s : grid) {
        for (double lv : grid) {
          const double v = kernels::minkowski_kernel(spec, s, MomentumMagnitude::timelike(lv));
          zero = zero && std::bit_cast<std::uint64_t>(v) == 0;
          largest = std::max(largest, std::fabs(v));
        }
      }
      out.push_back(make_check("n=" + std::to_string(n) + " momentum=timelike branch=spacelike is +0", 0.0, largest,
                               largest, 0.0, zero));
    }
  });
}

SuiteReport oracle(const QuadConfig& cfg) {
  return timed("oracle", [&](std::vector<Check>& out) {
    const RadialProfile bump = profiles::compact_bump();
    for (int dim : {2, 3}) {
      const double tol = dim == 2 ? 1e-3 : 5e-3;
      for (Character c : {Character::timelike, Character::spacelike}) {
        for (double k : {0.5, 1.0}) {
          const MomentumMagnitude l(k, c);
          const oracle::CartesianResult o =
              dim == 2 ? oracle::cartesian_ft_1p1(bump, l) : oracle::cartesian_ft_1p2(bump, l);
          const TransformResult r = transform(dim - 1, bump, l, cfg);
          const std::string tag = std::string(dim == 2 ? "1+1" : "1+2") + " bump " + to_string(c) + fmt(" k=%g", k);
          out.push_back(make_check(tag, r.value(), o.result.value, relative_gap(o.result.value, r.value()), tol,
                                   o.result.converged && r.converged()));
          const double drift = std::abs(o.result.value - o.without_last);
          out.push_back(make_check(tag + " window drift", o.result.value, o.without_last, drift,
                                   o.result.error_estimate));
        }
      }
    }
    const RadialProfile spacelike_only = profiles::compact_bump_spacelike();
    for (double k : {0.5, 1.0}) {
      const oracle::CartesianResult o = oracle::cartesian_ft_1p2(spacelike_only, MomentumMagnitude::timelike(k));
      out.push_back(make_check(fmt("1+2 spacelike-only bump timelike k=%g", k), 0.0, o.result.value,
                               std::abs(o.result.value), 5e-3, o.result.converged));
    }
    oracle::WindowConfig w;
    w.eta_schedule = QuadConfig::geometric_schedule(0.4, 5);
    w.panel_width = {0.25, 0.25, 0.25};
    w.abs_tol = w.rel_tol = 1e-8;
    w.target_rel = 1e-2;
    const RadialProfile g = profiles::gauss_oscillatory();
    for (double k : {0.25, 0.5, 1.0}) {
      const oracle::CartesianResult o = oracle::cartesian_ft_1p1(g, MomentumMagnitude::timelike(k), w);
      const Complex ref = gaussian_reference(k);
      out.push_back(make_check(fmt("1+1 window exp(i s^2) k=%g", k), ref, o.result.value,
                               relative_gap(o.result.value, ref), 1e-2, o.result.converged));
    }
  });
}

} // namespace lorentz::validation
