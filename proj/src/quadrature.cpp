#include "lorentz/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace lorentz::quad {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525730378, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for xgk[1], xgk[3], ..., xgk[9].
constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double epmach = std::numeric_limits<double>::epsilon();
constexpr double uflow = std::numeric_limits<double>::min();

enum class Map { identity, left_quadratic, right_quadratic, smoothstep };

// One segment of the initial partition, possibly in a mapped variable u.
struct Segment {
  Map map = Map::identity;
  double a = 0.0;  // physical start (or end for right_quadratic)
  double len = 0.0;

  Complex eval(const Integrand& f, double u) const {
    switch (map) {
      case Map::identity: return f(u);
      case Map::left_quadratic: return f(a + len * u * u) * (2.0 * len * u);
      case Map::right_quadratic: return f(a - len * u * u) * (2.0 * len * u);
      case Map::smoothstep: return f(a + len * u * u * (3.0 - 2.0 * u)) * (6.0 * len * u * (1.0 - u));
    }
    return {};
  }
};

struct Interval {
  double lo, hi;
  int seg;
  Complex value;
  double error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

Interval gauss_kronrod(const Integrand& f, const Segment& s, int seg, double lo, double hi) {
  const double centr = 0.5 * (lo + hi);
  const double hlgth = 0.5 * (hi - lo);
  const Complex fc = s.eval(f, centr);
  Complex resg{};
  Complex resk = fc * wgk[10];
  double resabs = std::abs(fc) * wgk[10];
  std::array<Complex, 10> fv1, fv2;
  for (int j = 0; j < 10; ++j) {
    const double dx = hlgth * xgk[j];
    const Complex f1 = s.eval(f, centr - dx);
    const Complex f2 = s.eval(f, centr + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += (f1 + f2) * wgk[j];
    resabs += (std::abs(f1) + std::abs(f2)) * wgk[j];
    if (j % 2 == 1) resg += (f1 + f2) * wg[j / 2];
  }
  const Complex reskh = resk * 0.5;
  double resasc = wgk[10] * std::abs(fc - reskh);
  for (int j = 0; j < 10; ++j) resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  const double ah = std::fabs(hlgth);
  resabs *= ah;
  resasc *= ah;
  double err = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > uflow / (50.0 * epmach)) err = std::max(epmach * 50.0 * resabs, err);
  return {lo, hi, seg, resk * hlgth, err};
}

std::vector<double> partition(double a, double b, std::span<const double> breakpoints) {
  std::vector<double> pts{a};
  std::vector<double> inner;
  for (double p : breakpoints)
    if (p > a && p < b) inner.push_back(p);
  std::sort(inner.begin(), inner.end());
  for (double p : inner)
    if (p > pts.back()) pts.push_back(p);
  pts.push_back(b);
  return pts;
}

} // namespace

std::vector<double> QuadConfig::geometric_schedule(double eps0, int count, double ratio) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  double e = eps0;
  for (int j = 0; j < count; ++j, e *= ratio) out.push_back(e);
  return out;
}

void QuadConfig::validate() const {
  if (!(abs_tol > 0) || !(rel_tol > 0)) throw std::invalid_argument("QuadConfig: tolerances must be > 0");
  if (max_subdivisions < 1) throw std::invalid_argument("QuadConfig: max_subdivisions must be positive");
  for (std::size_t i = 0; i < epsilon_schedule.size(); ++i) {
    if (!(epsilon_schedule[i] > 0)) throw std::invalid_argument("QuadConfig: epsilon values must be > 0");
    if (i > 0 && !(epsilon_schedule[i] < epsilon_schedule[i - 1]))
      throw std::invalid_argument("QuadConfig: epsilon_schedule must be strictly decreasing");
  }
  if (extrapolation_order < 0 ||
      static_cast<std::size_t>(extrapolation_order) + 1 > epsilon_schedule.size())
    throw std::invalid_argument("QuadConfig: extrapolation_order must be <= len(epsilon_schedule) - 1");
}

bool QuadConfig::within_tolerance(Complex value, double error) const {
  return error <= std::max(abs_tol, rel_tol * std::abs(value));
}

QuadResult combine(const QuadResult& a, const QuadResult& b) {
  return {a.value + b.value, a.error_estimate + b.error_estimate, a.converged && b.converged,
          a.evaluations + b.evaluations};
}

QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg, Endpoints ends,
                            std::span<const double> breakpoints) {
  if (!(a < b)) throw std::invalid_argument("integrate_finite: requires a < b");
  if (!(cfg.abs_tol > 0) || !(cfg.rel_tol > 0)) throw std::invalid_argument("integrate_finite: tolerances must be > 0");

  const std::vector<double> pts = partition(a, b, breakpoints);
  const std::size_t nseg = pts.size() - 1;
  std::vector<Segment> segs(nseg);
  std::vector<std::pair<double, double>> ranges(nseg);
  for (std::size_t i = 0; i < nseg; ++i) {
    const double lo = pts[i], hi = pts[i + 1];
    const bool left = ends.left_singular && i == 0;
    const bool right = ends.right_singular && i + 1 == nseg;
    if (left && right) {
      segs[i] = {Map::smoothstep, lo, hi - lo};
      ranges[i] = {0.0, 1.0};
    } else if (left) {
      segs[i] = {Map::left_quadratic, lo, hi - lo};
      ranges[i] = {0.0, 1.0};
    } else if (right) {
      segs[i] = {Map::right_quadratic, hi, hi - lo};
      ranges[i] = {0.0, 1.0};
    } else {
      segs[i] = {Map::identity, 0.0, 0.0};
      ranges[i] = {lo, hi};
    }
  }

  std::priority_queue<Interval> heap;
  Complex total{};
  double total_err = 0.0;
  long evals = 0;
  for (std::size_t i = 0; i < nseg; ++i) {
    Interval iv = gauss_kronrod(f, segs[i], static_cast<int>(i), ranges[i].first, ranges[i].second);
    evals += 21;
    total += iv.value;
    total_err += iv.error;
    heap.push(iv);
  }

  bool converged = false;
  int iterations = 0;
  while (true) {
    if (cfg.within_tolerance(total, total_err)) {
      converged = true;
      break;
    }
    if (static_cast<int>(heap.size()) >= cfg.max_subdivisions) break;
    Interval worst = heap.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const double scale = std::max(std::fabs(worst.lo), std::fabs(worst.hi));
    if (!(mid > worst.lo && mid < worst.hi) || worst.hi - worst.lo < 1e-14 * std::max(scale, 1e-300)) break;
    heap.pop();
    const Segment& s = segs[static_cast<std::size_t>(worst.seg)];
    Interval l = gauss_kronrod(f, s, worst.seg, worst.lo, mid);
    Interval r = gauss_kronrod(f, s, worst.seg, mid, worst.hi);
    evals += 42;
    total += l.value + r.value - worst.value;
    total_err += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
    if (++iterations % 256 == 0) {
      // resum to limit drift of the running totals
      auto copy = heap;
      total = {};
      total_err = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        total_err += copy.top().error;
        copy.pop();
      }
    }
  }
  if (!std::isfinite(total.real()) || !std::isfinite(total.imag())) converged = false;
  return {total, std::max(total_err, 0.0), converged, evals};
}

std::vector<double> extrapolation_weights(std::span<const double> eps) {
  std::vector<double> w(eps.size(), 1.0);
  for (std::size_t i = 0; i < eps.size(); ++i) {
    for (std::size_t j = 0; j < eps.size(); ++j) {
      if (j == i) continue;
      w[i] *= eps[j] / (eps[j] - eps[i]);
    }
  }
  return w;
}

namespace {

Complex extrapolate_last(std::span<const std::pair<double, Complex>> samples, std::size_t count) {
  const auto tail = samples.subspan(samples.size() - count);
  // Neville's scheme evaluated at eps = 0
  std::vector<Complex> p(count);
  for (std::size_t i = 0; i < count; ++i) p[i] = tail[i].second;
  for (std::size_t m = 1; m < count; ++m) {
    for (std::size_t i = 0; i + m < count; ++i) {
      const double xi = tail[i].first, xj = tail[i + m].first;
      p[i] = (xi * p[i + 1] - xj * p[i]) / (xi - xj);
    }
  }
  return p[0];
}

} // namespace

Extrapolation extrapolate_to_zero(std::span<const std::pair<double, Complex>> samples, int order) {
  if (order < 0) throw std::invalid_argument("extrapolate_to_zero: order must be >= 0");
  if (samples.size() < static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("extrapolate_to_zero: need at least order+1 samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i].first > 0)) throw std::invalid_argument("extrapolate_to_zero: eps must be > 0");
    if (i > 0 && samples[i].first == samples[i - 1].first)
      throw std::invalid_argument("extrapolate_to_zero: duplicate eps");
    if (i > 0 && !(samples[i].first < samples[i - 1].first))
      throw std::invalid_argument("extrapolate_to_zero: eps must be strictly decreasing");
  }
  const auto n = static_cast<std::size_t>(order) + 1;
  const Complex value = extrapolate_last(samples, n);
  double residual = 0.0;
  if (order >= 1) {
    residual = std::abs(value - extrapolate_last(samples, n - 1));
  } else if (samples.size() >= 2) {
    residual = std::abs(samples.back().second - samples[samples.size() - 2].second);
  }
  return {value, residual};
}

double truncation_point(const Integrand& f, double eps, const QuadConfig& cfg, const DampedOptions& opts) {
  const double target = cfg.abs_tol / 10.0;
  auto tail_factor = [eps](double x) { return std::max(1.0, 1.0 / (2.0 * eps * x)); };
  const double x0 = std::sqrt(std::log(1.0 / target) / eps);
  if (opts.envelope) {
    double x = x0;
    for (int i = 0; i < 200; ++i) {
      if (opts.envelope(x) * std::exp(-eps * x * x) * tail_factor(x) < target) break;
      x *= 1.1;
    }
    return x;
  }
  double m = 0.0;
  constexpr int samples = 256;
  for (int i = 1; i <= samples; ++i) {
    const double x = 1.5 * x0 * i / samples;
    const double v = std::abs(f(x));
    if (std::isfinite(v)) m = std::max(m, v);
  }
  if (m <= 0.0) return x0;
  double x = std::sqrt(std::max(std::log(m / target), 1.0) / eps);
  for (int i = 0; i < 50 && m * std::exp(-eps * x * x) * tail_factor(x) >= target; ++i) x *= 1.05;
  return x;
}

QuadResult integrate_semiinfinite_damped(const Integrand& f, const QuadConfig& cfg, const DampedOptions& opts) {
  const Endpoints ends{opts.left_singular, false};
  if (opts.support) {
    const double r = *opts.support;
    if (!(r > 0)) throw std::invalid_argument("integrate_semiinfinite_damped: support must be > 0");
    return integrate_finite(f, 0.0, r, cfg, ends, opts.breakpoints);
  }
  cfg.validate();
  if (!(opts.panel_width > 0)) throw std::invalid_argument("integrate_semiinfinite_damped: panel_width must be > 0");

  QuadConfig inner = cfg;
  inner.abs_tol = cfg.abs_tol / 10.0;
  inner.rel_tol = cfg.rel_tol / 10.0;

  std::vector<std::pair<double, Complex>> samples;
  std::vector<QuadResult> results;
  long evals = 0;
  for (double eps : cfg.epsilon_schedule) {
    const double x_max = truncation_point(f, eps, cfg, opts);
    std::vector<double> bps = opts.breakpoints;
    const int panels = std::min(static_cast<int>(std::ceil(x_max / opts.panel_width)), cfg.max_subdivisions / 4);
    for (int i = 1; i < panels; ++i) bps.push_back(x_max * i / panels);
    const Integrand damped = [&f, eps](double x) { return f(x) * std::exp(-eps * x * x); };
    QuadResult r = integrate_finite(damped, 0.0, x_max, inner, ends, bps);
    evals += r.evaluations + 256;
    samples.emplace_back(eps, r.value);
    results.push_back(r);
  }

  const Extrapolation ex = extrapolate_to_zero(samples, cfg.extrapolation_order);
  const std::size_t used = static_cast<std::size_t>(cfg.extrapolation_order) + 1;
  std::vector<double> eps_used;
  for (std::size_t i = samples.size() - used; i < samples.size(); ++i) eps_used.push_back(samples[i].first);
  const std::vector<double> w = extrapolation_weights(eps_used);
  double err = ex.residual;
  bool inner_ok = true;
  for (std::size_t i = 0; i < used; ++i) {
    const QuadResult& r = results[samples.size() - used + i];
    err += std::fabs(w[i]) * r.error_estimate;
    inner_ok = inner_ok && r.converged;
  }
  const bool finite = std::isfinite(ex.value.real()) && std::isfinite(ex.value.imag());
  return {ex.value, err, inner_ok && finite && cfg.within_tolerance(ex.value, err), evals};
}

} // namespace lorentz::quad
