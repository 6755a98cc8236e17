#pragma once

#include "lorentz/transform.hpp"

#include <string>
#include <vector>

namespace lorentz::validation {

struct Check {
  std::string name;
  Complex expected;
  Complex actual;
  double gap;
  double tolerance;
  bool pass;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const;
  double max_gap() const;
};

/// angular, closure, recursion, gaussian, reduction, oracle
const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite for "all". Throws
/// std::invalid_argument for an unknown name.
std::vector<SuiteReport> run(const std::string& suite, const QuadConfig& cfg = {});

SuiteReport angular(const QuadConfig& cfg = {});
/// damped int chi_1(r,k) chi_3(u,r) dr against 2 pi u Theta(u-k),
/// 1e-3 absolute, |u-k| >= 0.25.
SuiteReport closure(const QuadConfig& cfg = {});
SuiteReport recursion(const QuadConfig& cfg = {});
SuiteReport gaussian(const QuadConfig& cfg = {});
/// General-n kernels at n = 1, 2 against the closed n = 1, 2 integrands on a
/// 20 x 20 (s, l) grid, plus exact vanishing for even n.
SuiteReport reduction();
SuiteReport oracle(const QuadConfig& cfg = {});

/// Closure integral for one (k, u) pair.
QuadResult closure_integral(double k, double u, const QuadConfig& cfg = {});

} // namespace lorentz::validation
