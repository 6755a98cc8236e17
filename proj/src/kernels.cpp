#include "lorentz/kernels.hpp"

#include "lorentz/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lorentz {

const char* to_string(Character c) { return c == Character::timelike ? "timelike" : "spacelike"; }

MomentumMagnitude::MomentumMagnitude(double value, Character character) : value_(value), character_(character) {
  if (!(value > 0) || !std::isfinite(value))
    throw std::domain_error("MomentumMagnitude: value must be finite and > 0 (lightlike momenta unsupported)");
}

KernelSpec::KernelSpec(int n_, Character momentum_, Branch branch_) : n(n_), momentum(momentum_), branch(branch_) {
  if (n < 1 || n > kernels::max_dimension)
    throw std::domain_error("KernelSpec: n = " + std::to_string(n) + " outside [1, 10]");
}

} // namespace lorentz

namespace lorentz::kernels {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;
constexpr double euler_gamma = 0.577215664901532860606512090082402431;
constexpr double small_argument = 1e-8;

using specfun::Order;

enum class Kind { j, n, k };

// s^{nu+1} l^{-nu} Z_nu(2 pi s l), using the leading small-argument form
// when 2 pi s l is tiny so that the singular factors never overflow.
double scaled_cylinder(Kind kind, Order order, double s, double l) {
  const double nu = order.value();
  const double z = 2.0 * pi * s * l;
  if (z >= small_argument) {
    const double pref = std::pow(s, nu + 1.0) * std::pow(l, -nu);
    switch (kind) {
      case Kind::j: return pref * specfun::bessel_j(order, z);
      case Kind::n: return pref * specfun::bessel_n(order, z);
      case Kind::k: return pref * specfun::bessel_k(order, z);
    }
  }
  switch (kind) {
    case Kind::j: return std::pow(pi, nu) * std::pow(s, 2.0 * nu + 1.0) / specfun::gamma_fn(nu + 1.0);
    case Kind::n:
      if (order.twice() == 0) return s * (2.0 / pi) * (std::log(0.5 * z) + euler_gamma);
      return -specfun::gamma_fn(nu) * s / (std::pow(pi, nu + 1.0) * std::pow(l, 2.0 * nu));
    case Kind::k:
      if (order.twice() == 0) return -s * (std::log(0.5 * z) + euler_gamma);
      return specfun::gamma_fn(nu) * s / (2.0 * std::pow(pi, nu) * std::pow(l, 2.0 * nu));
  }
  return 0.0;
}

double chi_formula(int n, double a, double b) {
  if (n < 1 || n > 23) throw std::domain_error("chi: n = " + std::to_string(n) + " outside [1, 23]");
  const double z = 2.0 * pi * a * b;
  const double half_n = 0.5 * n;
  if (z < small_argument) {
    // J_p(z) ~ (z/2)^p / Gamma(p+1), p = n/2 - 1
    if (a == 0.0) return n == 1 ? 2.0 : 0.0;
    return 2.0 * std::pow(pi, half_n) * std::pow(a, n - 1.0) / specfun::gamma_fn(half_n);
  }
  return 2.0 * pi * std::pow(a, half_n) * std::pow(b, 1.0 - half_n) * specfun::bessel_j(Order(n - 2), z);
}

} // namespace

double chi(int n, double r, double k) {
  if (!(k > 0)) throw std::domain_error("chi: k must be > 0");
  if (!(r >= 0)) throw std::domain_error("chi: r must be >= 0");
  return chi_formula(n, r, k);
}

double chi_dual(int n, double k, double r) {
  if (!(k > 0)) throw std::domain_error("chi_dual: k must be > 0");
  if (!(r >= 0)) throw std::domain_error("chi_dual: r must be >= 0");
  return chi_formula(n, k, r);
}

double minkowski_kernel(const KernelSpec& spec, double s, const MomentumMagnitude& l) {
  if (spec.momentum != l.character())
    throw std::invalid_argument("minkowski_kernel: kernel spec and momentum character differ");
  if (!(s >= 0)) throw std::domain_error("minkowski_kernel: s must be >= 0");
  const int n = spec.n;
  const int c = cos_half_pi(n - 1);
  const int sn = sin_half_pi(n - 1);
  const bool timelike_branch = spec.branch == Branch::timelike_profile;
  if (spec.momentum == Character::timelike && !timelike_branch && c == 0) return 0.0;
  if (s == 0.0) return 0.0;

  const Order order(n - 1);
  const double lv = l.value();
  if (spec.momentum == Character::timelike) {
    if (timelike_branch) {
      double bracket = 0.0;
      if (c != 0) bracket += c * scaled_cylinder(Kind::n, order, s, lv);
      if (sn != 0) bracket += sn * scaled_cylinder(Kind::j, order, s, lv);
      return -2.0 * pi * bracket;
    }
    return 4.0 * c * scaled_cylinder(Kind::k, order, s, lv);
  }
  if (timelike_branch) return 4.0 * scaled_cylinder(Kind::k, order, s, lv);
  return -2.0 * pi * scaled_cylinder(Kind::n, order, s, lv);
}

double closure_rhs(int n, int m, double k, double u) {
  if (m <= n || (m - n) % 2 != 0) throw std::domain_error("closure_rhs: requires m > n with m - n even");
  if (!(k > 0) || !(u > 0)) throw std::domain_error("closure_rhs: k and u must be > 0");
  const int h = (m - n) / 2;
  if (u < k) return 0.0;
  const double coeff = 2.0 * std::pow(pi, h) / specfun::gamma_fn(h);
  if (u == k) return h == 1 ? 0.5 * coeff * u : 0.0;
  return coeff * u * std::pow(u * u - k * k, h - 1);
}

} // namespace lorentz::kernels
