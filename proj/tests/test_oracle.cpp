#include "doctest.h"

#include "lorentz/oracle.hpp"
#include "lorentz/profiles.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

using namespace lorentz;
using namespace lorentz::oracle;

namespace {

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

} // namespace

TEST_CASE("angular identities") {
  const QuadConfig cfg;
  const AngularCheck k0 = check_angular_identity(AngularIdentity::sinh_to_K0, 1.0, cfg);
  CHECK(k0.converged);
  CHECK(std::fabs(k0.rhs - 2 * boost::math::cyl_bessel_k(0, 1.0)) < 1e-14);
  CHECK(k0.gap <= 1e-8);

  const AngularCheck n0 = check_angular_identity(AngularIdentity::cosh_to_N0, 2.0, cfg);
  CHECK(std::fabs(n0.rhs + M_PI * boost::math::cyl_neumann(0, 2.0)) < 1e-14);
  CHECK(n0.gap <= 1e-6);

  // near the small end both sides approach pi/2
  const AngularCheck th = check_angular_identity(AngularIdentity::theta_to_J0_half, 0.2, cfg);
  CHECK(std::fabs(th.lhs - M_PI / 2) < 0.02);
  CHECK(th.gap <= 1e-12);

  const AngularCheck cc = check_angular_identity(AngularIdentity::cosh_J0_cos, 2.0, cfg);
  CHECK(std::fabs(cc.rhs - M_PI / 4 * std::cos(2.0)) < 1e-15);
  CHECK(cc.gap <= 1e-6);

  for (auto id : all_identities()) {
    CHECK(std::string(to_string(id)).size() > 0);
    CHECK_THROWS_AS(check_angular_identity(id, 0.1, cfg), std::domain_error);
    CHECK_THROWS_AS(check_angular_identity(id, 11.0, cfg), std::domain_error);
  }
  CHECK(all_identities().size() == 6);
}

TEST_CASE("window configuration") {
  WindowConfig w;
  CHECK_NOTHROW(w.validate());
  CHECK(w.box_halfwidth(0.01) > w.box_halfwidth(0.05));
  CHECK(std::fabs(std::exp(-0.05 * std::pow(w.box_halfwidth(0.05), 2)) - w.window_floor) < 1e-20);
  CHECK_THROWS_AS(w.box_halfwidth(0.0), std::domain_error);
  w.eta_schedule = {0.1, 0.2};
  CHECK_THROWS_AS(w.validate(), std::invalid_argument);
  w = WindowConfig{};
  w.extrapolation_order = static_cast<int>(w.eta_schedule.size());
  CHECK_THROWS_AS(w.validate(), std::invalid_argument);
  w = WindowConfig{};
  w.window_floor = 1.0;
  CHECK_THROWS_AS(w.validate(), std::invalid_argument);
  CHECK_NOTHROW(coarse_window().validate());
}

TEST_CASE("Cartesian oracle: zero profile") {
  for (Character c : {Character::timelike, Character::spacelike}) {
    const CartesianResult a = cartesian_ft_1p1(profiles::zero(), MomentumMagnitude(0.5, c));
    CHECK(a.result.value == Complex{});
    CHECK(a.result.converged);
    const CartesianResult b = cartesian_ft_1p2(profiles::zero(), MomentumMagnitude(0.5, c));
    CHECK(b.result.value == Complex{});
    CHECK(b.result.converged);
  }
}

TEST_CASE("Cartesian oracle 1+1 agrees with the radial pipeline for the bump") {
  const QuadConfig cfg;
  const RadialProfile bump = profiles::compact_bump();
  for (Character c : {Character::timelike, Character::spacelike}) {
    for (double k : {0.5, 1.0}) {
      const MomentumMagnitude l(k, c);
      const CartesianResult o = cartesian_ft_1p1(bump, l);
      const TransformResult r = transform(1, bump, l, cfg);
      CAPTURE(std::string(to_string(c)));
      CAPTURE(k);
      CHECK(o.result.converged);
      CHECK(rel(o.result.value, r.value()) <= 1e-3);
      CHECK(std::abs(o.result.value - o.without_last) <= o.result.error_estimate);
      CHECK(o.samples.size() == WindowConfig{}.eta_schedule.size());
      CHECK(o.result.evaluations > 0);
    }
  }
}

TEST_CASE("Cartesian oracle 1+1 reproduces the e^{i s^2} closed form") {
  WindowConfig w;
  w.eta_schedule = QuadConfig::geometric_schedule(0.4, 5);
  w.panel_width = {0.25, 0.25, 0.25};
  w.abs_tol = w.rel_tol = 1e-8;
  w.target_rel = 1e-2;
  const CartesianResult o = cartesian_ft_1p1(profiles::gauss_oscillatory(), MomentumMagnitude::timelike(0.5), w);
  CHECK(o.result.converged);
  CHECK(rel(o.result.value, gaussian_reference(0.5)) <= 1e-2);
}

TEST_CASE("Cartesian oracle 1+2") {
  const QuadConfig cfg;
  const RadialProfile bump = profiles::compact_bump();
  const MomentumMagnitude l = MomentumMagnitude::timelike(1.0);
  const CartesianResult o = cartesian_ft_1p2(bump, l);
  const TransformResult r = transform(2, bump, l, cfg);
  CHECK(o.result.converged);
  CHECK(rel(o.result.value, r.value()) <= 5e-3);

  const CartesianResult s = cartesian_ft_1p2(profiles::compact_bump_spacelike(), l);
  CHECK(std::abs(s.result.value) <= 5e-3);
}
