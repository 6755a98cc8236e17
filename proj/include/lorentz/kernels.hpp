#pragma once

// Radial kernels for Fourier transforms of Lorentz-invariant functions on
// R^{1,n}, with the exp(-2 pi i k.x) convention and metric diag(1,-1,...,-1).

namespace lorentz {

enum class Character { timelike, spacelike };

/// Which radial branch of a profile a kernel multiplies: the timelike region
/// (s0 = sqrt(t^2 - r^2)) or the spacelike region (s1 = sqrt(r^2 - t^2)).
enum class Branch { timelike_profile, spacelike_profile };

const char* to_string(Character c);

/// Invariant momentum magnitude: l0 = sqrt(k0^2 - k^2) for timelike momenta,
/// l1 = sqrt(k^2 - k0^2) for spacelike ones. Lightlike momenta (l = 0) are
/// rejected.
class MomentumMagnitude {
public:
  MomentumMagnitude(double value, Character character);

  static MomentumMagnitude timelike(double l) { return {l, Character::timelike}; }
  static MomentumMagnitude spacelike(double l) { return {l, Character::spacelike}; }

  double value() const { return value_; }
  Character character() const { return character_; }

private:
  double value_;
  Character character_;
};

struct KernelSpec {
  KernelSpec(int n, Character momentum, Branch branch);

  int n;  // spatial dimension, 1..10
  Character momentum;
  Branch branch;
};

} // namespace lorentz

namespace lorentz::kernels {

inline constexpr int max_dimension = 10;

/// cos(pi m / 2) and sin(pi m / 2) by case analysis on m mod 4.
constexpr int cos_half_pi(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return 1;
    case 2: return -1;
    default: return 0;
  }
}
constexpr int sin_half_pi(int m) { return cos_half_pi(m - 1); }

/// Euclidean radial Fourier kernel chi_n(r, k) = 2 pi r^{n/2} k^{1-n/2} J_{n/2-1}(2 pi r k).
/// Requires r >= 0, k > 0; n in 1..23.
double chi(int n, double r, double k);

/// The kernel with its arguments exchanged, chi_n(k, r), as used by the
/// inverse transform. Requires k > 0, r >= 0; at r = 0 it returns the limit
/// 2 pi^{n/2} k^{n-1} / Gamma(n/2).
double chi_dual(int n, double k, double r);

/// Weight w(s) with F^{(n)}(l) = sum over branches of int_0^inf f_branch(s) w(s) ds.
double minkowski_kernel(const KernelSpec& spec, double s, const MomentumMagnitude& l);

/// Right-hand side of int_0^inf chi_n(r,k) chi_m(u,r) dr, i.e.
/// (2 pi^h / Gamma(h)) u (u^2-k^2)^{h-1} Theta(u-k) with h = (m-n)/2.
/// At u = k with h = 1 the step takes the value 1/2.
double closure_rhs(int n, int m, double k, double u);

} // namespace lorentz::kernels
