#include "lorentz/profiles.hpp"

#include <boost/math/special_functions/fpclassify.hpp>  // pchip.hpp in Boost 1.74 calls isnan unqualified
#include <boost/math/interpolators/pchip.hpp>

#include <cmath>
#include <stdexcept>

namespace lorentz::profiles {

namespace {

double bump(double s) {
  if (s >= 1.0) return 0.0;
  const double u = 1.0 - s * s;
  return u * u * u;
}

RadialProfile bump_profile(bool timelike, bool spacelike) {
  RadialProfile p;
  p.timelike = [timelike](double s) { return timelike ? Complex(bump(s)) : Complex{}; };
  p.spacelike = [spacelike](double s) { return spacelike ? Complex(bump(s)) : Complex{}; };
  p.envelope = [](double s) { return s < 1.0 ? 1.0 : 0.0; };
  p.support = 1.0;
  p.continuous_at_lightcone = timelike == spacelike;
  return p;
}

} // namespace

RadialProfile gauss_oscillatory() {
  RadialProfile p;
  p.timelike = [](double s) { return std::exp(Complex(0.0, s * s)); };
  p.spacelike = [](double s) { return std::exp(Complex(0.0, -s * s)); };
  p.envelope = [](double) { return 1.0; };
  p.continuous_at_lightcone = true;
  return p;
}

RadialProfile gauss_decay_timelike() {
  RadialProfile p;
  p.timelike = [](double s) { return Complex(std::exp(-s * s)); };
  p.spacelike = [](double) { return Complex{}; };
  p.envelope = [](double s) { return std::exp(-s * s); };
  return p;
}

RadialProfile compact_bump() { return bump_profile(true, true); }
RadialProfile compact_bump_timelike() { return bump_profile(true, false); }
RadialProfile compact_bump_spacelike() { return bump_profile(false, true); }

RadialProfile zero() {
  RadialProfile p;
  p.timelike = [](double) { return Complex{}; };
  p.spacelike = [](double) { return Complex{}; };
  p.envelope = [](double) { return 0.0; };
  p.continuous_at_lightcone = true;
  return p;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"gauss_oscillatory", "gauss_decay_timelike", "compact_bump", "zero"};
  return names;
}

RadialProfile builtin(const std::string& name) {
  if (name == "gauss_oscillatory") return gauss_oscillatory();
  if (name == "gauss_decay_timelike") return gauss_decay_timelike();
  if (name == "compact_bump") return compact_bump();
  if (name == "zero") return zero();
  throw std::invalid_argument("unknown builtin profile '" + name + "'");
}

struct TabulatedProfile::Interpolants {
  using Pchip = boost::math::interpolators::pchip<std::vector<double>>;
  Pchip re_t, im_t, re_s, im_s;
  double first, last;
};

namespace {

using Pchip = boost::math::interpolators::pchip<std::vector<double>>;

Pchip make_pchip(const std::vector<ProfileSample>& samples, double (*component)(const ProfileSample&)) {
  std::vector<double> x, y;
  x.reserve(samples.size());
  y.reserve(samples.size());
  for (const auto& p : samples) {
    x.push_back(p.s);
    y.push_back(component(p));
  }
  return Pchip(std::move(x), std::move(y));
}

} // namespace

TabulatedProfile::TabulatedProfile(std::vector<ProfileSample> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 4) throw std::invalid_argument("TabulatedProfile: at least four samples are required");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& p = samples_[i];
    if (!(p.s >= 0) || !std::isfinite(p.s)) throw std::invalid_argument("TabulatedProfile: s must be finite and >= 0");
    if (i > 0 && !(p.s > samples_[i - 1].s)) throw std::invalid_argument("TabulatedProfile: s must be strictly increasing");
  }
  interp_ = std::make_shared<const Interpolants>(Interpolants{
      make_pchip(samples_, [](const ProfileSample& p) { return p.timelike.real(); }),
      make_pchip(samples_, [](const ProfileSample& p) { return p.timelike.imag(); }),
      make_pchip(samples_, [](const ProfileSample& p) { return p.spacelike.real(); }),
      make_pchip(samples_, [](const ProfileSample& p) { return p.spacelike.imag(); }),
      samples_.front().s, samples_.back().s});
}

Complex TabulatedProfile::timelike(double s) const {
  if (s > interp_->last) return {};
  if (s <= interp_->first) return samples_.front().timelike;
  return {interp_->re_t(s), interp_->im_t(s)};
}

Complex TabulatedProfile::spacelike(double s) const {
  if (s > interp_->last) return {};
  if (s <= interp_->first) return samples_.front().spacelike;
  return {interp_->re_s(s), interp_->im_s(s)};
}

RadialProfile TabulatedProfile::profile() const {
  RadialProfile p;
  auto self = std::make_shared<const TabulatedProfile>(*this);
  p.timelike = [self](double s) { return self->timelike(s); };
  p.spacelike = [self](double s) { return self->spacelike(s); };
  p.support = samples_.back().s;
  if (p.support <= 0.0) p.support.reset();
  constexpr std::size_t max_breakpoints = 2000;
  if (samples_.size() <= max_breakpoints) {
    for (const auto& smp : samples_) p.breakpoints.push_back(smp.s);
  }
  return p;
}

} // namespace lorentz::profiles
