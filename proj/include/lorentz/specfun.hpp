#pragma once

// Cylinder functions J, N (= Y), K for integer and half-integer order, and
// the Gamma function, on the ranges needed by the radial kernels.

namespace lorentz::specfun {

/// Bessel order stored as 2*nu, so integer and half-integer orders are exact.
/// Supported range is -1/2 <= nu <= 21/2.
class Order {
public:
  static constexpr int min_twice = -1;
  static constexpr int max_twice = 21;

  explicit Order(int twice_nu);

  static Order integer(int nu) { return Order(2 * nu); }

  int twice() const { return twice_nu_; }
  double value() const { return 0.5 * twice_nu_; }
  bool is_integer() const { return twice_nu_ % 2 == 0; }

  friend bool operator==(Order, Order) = default;

private:
  int twice_nu_;
};

/// J_nu(x), x >= 0 (x = 0 only for nu >= 0).
double bessel_j(Order nu, double x);

/// N_nu(x) (Neumann, second kind), x > 0.
double bessel_n(Order nu, double x);

/// K_nu(x) (Macdonald, modified third kind), x > 0.
double bessel_k(Order nu, double x);

// Derivatives from Z'_nu = (nu/x) Z_nu - Z_{nu+1} (J, N) and
// K'_nu = (nu/x) K_nu - K_{nu+1}; order must be at most 19/2.
double bessel_j_prime(Order nu, double x);
double bessel_n_prime(Order nu, double x);
double bessel_k_prime(Order nu, double x);

/// Gamma(x) for x > 0.
double gamma_fn(double x);

} // namespace lorentz::specfun
