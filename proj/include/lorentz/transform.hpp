#pragma once

#include "lorentz/kernels.hpp"
#include "lorentz/quadrature.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace lorentz {

using Complex = std::complex<double>;
using quad::QuadConfig;
using quad::QuadResult;

/// A Lorentz-invariant function f(s^2) given by its two radial branches.
struct RadialProfile {
  /// f at s^2 = +s0^2, s0 >= 0.
  std::function<Complex(double)> timelike;
  /// f at s^2 = -s1^2, s1 >= 0.
  std::function<Complex(double)> spacelike;
  /// Optional bound on |f| on both branches, used to place truncation points.
  std::function<double(double)> envelope;
  /// When set, both branches vanish for s > support.
  std::optional<double> support;
  /// Radii where either branch has a kink or jump, passed to the quadrature.
  std::vector<double> breakpoints;
  /// The caller asserts f is continuous across the light-cone.
  bool continuous_at_lightcone = false;

  /// Throws std::invalid_argument if a branch is missing, or if continuity
  /// was declared but the branch values at s = 0 differ.
  void validate() const;
};

struct TransformResult {
  QuadResult total;
  QuadResult timelike_branch;
  QuadResult spacelike_branch;

  Complex value() const { return total.value; }
  bool converged() const { return total.converged; }
  /// Human-readable list of branches that failed to converge, empty if none.
  std::string failed_branches() const;
};

/// Real radial weight for one branch.
using BranchKernel = std::function<double(double)>;

/// sum_b int_0^inf f_b(s) w_b(s) ds, each branch through the damped
/// prescription. An empty kernel marks a branch that contributes nothing.
TransformResult radial_transform(const RadialProfile& profile, const BranchKernel& timelike_kernel,
                                 const BranchKernel& spacelike_kernel, const QuadConfig& cfg);

/// F^{(n)}(l) for 1 <= n <= 10.
TransformResult transform(int n, const RadialProfile& profile, const MomentumMagnitude& l, const QuadConfig& cfg);

/// int_0^inf chi_n(r, k) g(r) dr under the damped prescription.
QuadResult hankel_transform(int n, const std::function<Complex(double)>& g, double k, const QuadConfig& cfg,
                            const quad::DampedOptions& opts = {});

/// int_0^inf chi_n(k, r) G(k) dk, the inverse of hankel_transform.
QuadResult hankel_inverse(int n, const std::function<Complex(double)>& G, double r, const QuadConfig& cfg,
                          const quad::DampedOptions& opts = {});

struct Derivative {
  Complex value;
  double error;
};

/// Step used by recursion_step when none is given: max(1e-3, 1e-3 k).
double default_recursion_step(double k);

/// F^{(n+2)}(k) = -(1/(2 pi k)) dF^{(n)}/dk by a central difference with one
/// Richardson step-halving pass; the error is the halving correction.
/// Requires 0 < h < k.
Derivative recursion_step(const std::function<Complex(double)>& F_n, double k, double h);
Derivative recursion_step(const std::function<Complex(double)>& F_n, double k);

/// The recursion written in the invariant magnitude: for timelike momenta
/// F^{(n+2)}(l0) = +(1/(2 pi l0)) dF^{(n)}/dl0, for spacelike momenta
/// F^{(n+2)}(l1) = -(1/(2 pi l1)) dF^{(n)}/dl1.
Derivative recursion_step(const std::function<Complex(double)>& F_n, const MomentumMagnitude& l);

/// pi exp(-i pi^2 k^2): transform in 1+1 dimensions of exp(i s^2) at timelike k.
Complex gaussian_reference(double k);

struct SpectrumRow {
  Character character;
  double l;
  Complex value;
  double error;
  bool converged;
};

/// Rows in grid order. Within each block of consecutive rows with the same
/// character, l is strictly increasing.
class SpectrumTable {
public:
  SpectrumTable() = default;
  explicit SpectrumTable(std::vector<SpectrumRow> rows);

  const std::vector<SpectrumRow>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool all_converged() const;

private:
  std::vector<SpectrumRow> rows_;
};

/// One transform per grid point, evaluated on up to `threads` workers
/// (0 = hardware concurrency). Row order follows the grid.
SpectrumTable spectrum(int n, const RadialProfile& profile, const std::vector<MomentumMagnitude>& grid,
                       const QuadConfig& cfg, unsigned threads = 0);

} // namespace lorentz
