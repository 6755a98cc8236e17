#include "lorentz/transform.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace lorentz {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

QuadResult zero_result() { return {Complex{}, 0.0, true, 0}; }

QuadResult integrate_branch(const std::function<Complex(double)>& f, const BranchKernel& w,
                            const RadialProfile& profile, const QuadConfig& cfg) {
  if (!w) return zero_result();
  quad::DampedOptions opts;
  opts.support = profile.support;
  opts.breakpoints = profile.breakpoints;
  opts.left_singular = true;
  if (profile.envelope) {
    // |w| oscillates, so bound it by its maximum over a short window.
    opts.envelope = [&profile, &w](double s) {
      double m = 0.0;
      for (int j = 0; j < 8; ++j) m = std::max(m, std::fabs(w(s * (1.0 + j / 16.0))));
      return profile.envelope(s) * m;
    };
  }
  const quad::Integrand integrand = [&f, &w](double s) { return f(s) * w(s); };
  return quad::integrate_semiinfinite_damped(integrand, cfg, opts);
}

} // namespace

void RadialProfile::validate() const {
  if (!timelike || !spacelike) throw std::invalid_argument("RadialProfile: both branches are required");
  if (support && !(*support > 0)) throw std::invalid_argument("RadialProfile: support must be > 0");
  if (continuous_at_lightcone) {
    const Complex a = timelike(0.0), b = spacelike(0.0);
    if (std::abs(a - b) > 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}))
      throw std::invalid_argument("RadialProfile: branches disagree on the light-cone");
  }
}

std::string TransformResult::failed_branches() const {
  std::string out;
  if (!timelike_branch.converged) out = "timelike";
  if (!spacelike_branch.converged) out += out.empty() ? "spacelike" : ",spacelike";
  return out;
}

TransformResult radial_transform(const RadialProfile& profile, const BranchKernel& timelike_kernel,
                                 const BranchKernel& spacelike_kernel, const QuadConfig& cfg) {
  profile.validate();
  TransformResult r;
  r.timelike_branch = integrate_branch(profile.timelike, timelike_kernel, profile, cfg);
  r.spacelike_branch = integrate_branch(profile.spacelike, spacelike_kernel, profile, cfg);
  r.total = quad::combine(r.timelike_branch, r.spacelike_branch);
  return r;
}

TransformResult transform(int n, const RadialProfile& profile, const MomentumMagnitude& l, const QuadConfig& cfg) {
  const KernelSpec ts(n, l.character(), Branch::timelike_profile);
  const KernelSpec ss(n, l.character(), Branch::spacelike_profile);
  const BranchKernel wt = [ts, l](double s) { return kernels::minkowski_kernel(ts, s, l); };
  BranchKernel ws;
  // even n, timelike momentum: the spacelike region does not contribute
  if (!(l.character() == Character::timelike && kernels::cos_half_pi(n - 1) == 0))
    ws = [ss, l](double s) { return kernels::minkowski_kernel(ss, s, l); };
  return radial_transform(profile, wt, ws, cfg);
}

QuadResult hankel_transform(int n, const std::function<Complex(double)>& g, double k, const QuadConfig& cfg,
                            const quad::DampedOptions& opts) {
  if (!(k > 0)) throw std::domain_error("hankel_transform: k must be > 0");
  const quad::Integrand f = [n, &g, k](double r) { return kernels::chi(n, r, k) * g(r); };
  return quad::integrate_semiinfinite_damped(f, cfg, opts);
}

QuadResult hankel_inverse(int n, const std::function<Complex(double)>& G, double r, const QuadConfig& cfg,
                          const quad::DampedOptions& opts) {
  if (!(r >= 0)) throw std::domain_error("hankel_inverse: r must be >= 0");
  const quad::Integrand f = [n, &G, r](double k) { return k > 0 ? kernels::chi_dual(n, k, r) * G(k) : Complex{}; };
  return quad::integrate_semiinfinite_damped(f, cfg, opts);
}

double default_recursion_step(double k) { return std::max(1e-3, 1e-3 * k); }

Derivative recursion_step(const std::function<Complex(double)>& F_n, double k, double h) {
  if (!(k > 0)) throw std::domain_error("recursion_step: k must be > 0");
  if (!(h > 0) || !(h < k)) throw std::domain_error("recursion_step: step must satisfy 0 < h < k");
  const Complex d1 = (F_n(k + h) - F_n(k - h)) / (2.0 * h);
  const double h2 = 0.5 * h;
  const Complex d2 = (F_n(k + h2) - F_n(k - h2)) / (2.0 * h2);
  const Complex richardson = (4.0 * d2 - d1) / 3.0;
  const double scale = 1.0 / (2.0 * pi * k);
  return {-scale * richardson, scale * std::abs(d2 - d1) / 3.0};
}

Derivative recursion_step(const std::function<Complex(double)>& F_n, double k) {
  return recursion_step(F_n, k, default_recursion_step(k));
}

Derivative recursion_step(const std::function<Complex(double)>& F_n, const MomentumMagnitude& l) {
  Derivative d = recursion_step(F_n, l.value());
  if (l.character() == Character::timelike) d.value = -d.value;
  return d;
}

Complex gaussian_reference(double k) {
  if (!(k > 0) || !std::isfinite(k)) throw std::domain_error("gaussian_reference: k must be > 0");
  return pi * std::exp(Complex(0.0, -pi * pi * k * k));
}

SpectrumTable::SpectrumTable(std::vector<SpectrumRow> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!(rows_[i].error >= 0)) throw std::invalid_argument("SpectrumTable: error must be >= 0");
    if (i > 0 && rows_[i].character == rows_[i - 1].character && !(rows_[i].l > rows_[i - 1].l))
      throw std::invalid_argument("SpectrumTable: l must increase within a character block");
  }
}

bool SpectrumTable::all_converged() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SpectrumRow& r) { return r.converged; });
}

SpectrumTable spectrum(int n, const RadialProfile& profile, const std::vector<MomentumMagnitude>& grid,
                       const QuadConfig& cfg, unsigned threads) {
  if (grid.empty()) throw std::invalid_argument("spectrum: grid must be nonempty");
  profile.validate();
  std::vector<SpectrumRow> rows(grid.size());
  auto evaluate = [&](std::size_t i) {
    const MomentumMagnitude& l = grid[i];
    SpectrumRow row{l.character(), l.value(), Complex{}, 0.0, false};
    try {
      const TransformResult r = transform(n, profile, l, cfg);
      row.value = r.value();
      row.error = r.total.error_estimate;
      row.converged = r.converged();
    } catch (const std::exception&) {
      row.value = Complex(std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN());
      row.error = std::numeric_limits<double>::infinity();
    }
    if (!(row.error >= 0)) row.error = std::numeric_limits<double>::infinity();
    rows[i] = row;
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(grid.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) evaluate(i);
      });
    }
  }
  return SpectrumTable(std::move(rows));
}

} // namespace lorentz
