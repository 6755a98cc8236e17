#pragma once

#include "lorentz/transform.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lorentz::profiles {

/// f(s^2) = exp(i s^2): exp(i s0^2) on the timelike branch, exp(-i s1^2) on
/// the spacelike one.
RadialProfile gauss_oscillatory();

/// exp(-s0^2) on the timelike branch, zero on the spacelike branch.
RadialProfile gauss_decay_timelike();

/// (1 - s^2)^3 for s < 1 on both branches, zero beyond.
RadialProfile compact_bump();
/// The same bump restricted to one branch.
RadialProfile compact_bump_timelike();
RadialProfile compact_bump_spacelike();

RadialProfile zero();

/// Names accepted by `builtin`.
const std::vector<std::string>& builtin_names();

/// Throws std::invalid_argument for an unknown name.
RadialProfile builtin(const std::string& name);

struct ProfileSample {
  double s;
  Complex timelike;
  Complex spacelike;
};

/// A profile tabulated on strictly increasing s >= 0, interpolated by a
/// monotone piecewise-cubic (PCHIP) scheme on each real component. Below the
/// first node the first value is held; beyond the last node it is zero.
class TabulatedProfile {
public:
  /// Requires at least four samples.
  explicit TabulatedProfile(std::vector<ProfileSample> samples);

  const std::vector<ProfileSample>& samples() const { return samples_; }

  Complex timelike(double s) const;
  Complex spacelike(double s) const;

  RadialProfile profile() const;

private:
  struct Interpolants;
  std::vector<ProfileSample> samples_;
  std::shared_ptr<const Interpolants> interp_;
};

} // namespace lorentz::profiles
