#pragma once

// Reference values from ascending series in 100-digit arithmetic. Summation
// stops once a term falls below 1e-70 of the running sum and past the
// largest term, so the truncation error is far below double precision even
// after the cancellation at x = 50.

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

namespace oracle_series {

using mp = boost::multiprecision::cpp_bin_float_100;

inline mp pi() { return boost::math::constants::pi<mp>(); }

// sum_k s^k (x/2)^{2k+nu} / (k! Gamma(k+nu+1)), s = -1 for J, +1 for I
inline mp ascending(int twice_nu, double xd, int sign) {
  const mp x = xd;
  const mp nu = mp(twice_nu) / 2;
  const mp h = x / 2;
  const mp q = sign * h * h;
  mp term = pow(h, nu) / boost::math::tgamma(nu + 1);
  mp sum = term;
  for (int k = 0; k < 2000; ++k) {
    term *= q / (mp(k + 1) * (nu + k + 1));
    sum += term;
    if (k > xd && abs(term) < abs(sum) * mp("1e-70")) break;
  }
  return sum;
}

inline double J(int twice_nu, double x) { return static_cast<double>(ascending(twice_nu, x, -1)); }

inline mp digamma_int(int m) {  // psi(m), m >= 1
  mp s = -boost::math::constants::euler<mp>();
  for (int j = 1; j < m; ++j) s += mp(1) / j;
  return s;
}

inline mp factorial(int m) {
  mp f = 1;
  for (int j = 2; j <= m; ++j) f *= j;
  return f;
}

// Integer order n >= 0.
inline double Y_int(int n, double xd) {
  const mp x = xd, h = x / 2;
  mp finite = 0;
  for (int k = 0; k < n; ++k) finite += factorial(n - k - 1) / factorial(k) * pow(h, 2 * k - n);
  const mp jn = ascending(2 * n, xd, -1);
  mp series = 0, term = pow(h, n) / factorial(n);  // (-h^2)^k h^n / (k! (n+k)!)
  for (int k = 0; k < 2000; ++k) {
    const mp add = (digamma_int(k + 1) + digamma_int(n + k + 1)) * term;
    series += add;
    if (k > xd && abs(add) < mp("1e-70") * (abs(series) + 1)) break;
    term *= -h * h / (mp(k + 1) * (n + k + 1));
  }
  return static_cast<double>(-finite / pi() + 2 / pi() * log(h) * jn - series / pi());
}

inline double K_int(int n, double xd) {
  const mp x = xd, h = x / 2;
  mp finite = 0;
  for (int k = 0; k < n; ++k) {
    const mp t = factorial(n - k - 1) / factorial(k) * pow(-h * h, k);
    finite += t;
  }
  finite *= pow(h, -n) / 2;
  const mp in = ascending(2 * n, xd, +1);
  mp series = 0, term = pow(h, n) / factorial(n);
  for (int k = 0; k < 2000; ++k) {
    const mp add = (digamma_int(k + 1) + digamma_int(n + k + 1)) * term;
    series += add;
    if (k > xd && abs(add) < mp("1e-70") * abs(series)) break;
    term *= h * h / (mp(k + 1) * (n + k + 1));
  }
  const mp sgn = (n % 2 == 0) ? 1 : -1;
  return static_cast<double>(finite - sgn * log(h) * in + sgn * series / 2);
}

// Half-integer order nu = m + 1/2, m >= -1, through J_{-nu} and I_{+-nu}.
inline double Y_half(int twice_nu, double x) {
  const int m = (twice_nu - 1) / 2;
  const mp jm = ascending(-twice_nu, x, -1);
  return static_cast<double>(((m % 2 == 0) ? -jm : jm));
}

inline double K_half(int twice_nu, double x) {
  const int m = (twice_nu - 1) / 2;
  const mp d = ascending(-twice_nu, x, +1) - ascending(twice_nu, x, +1);
  const mp s = (m % 2 == 0) ? 1 : -1;
  return static_cast<double>(pi() / 2 * s * d);
}

inline double gamma(double x) { return static_cast<double>(boost::math::tgamma(mp(x))); }

} // namespace oracle_series
