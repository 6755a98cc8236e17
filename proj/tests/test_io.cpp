#include "doctest.h"

#include "lorentz/io.hpp"
#include "lorentz/profiles.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace lorentz;

namespace {

std::vector<double> uniform(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

// runtime_error whose message names the given line
bool fails_on_line(const std::string& csv, int line) {
  std::istringstream in(csv);
  try {
    io::read_profile_samples(in);
  } catch (const std::runtime_error& e) {
    return std::string(e.what()).find("csv line " + std::to_string(line) + ":") == 0;
  }
  return false;
}

const std::string header = std::string(io::profile_header) + "\n";

} // namespace

TEST_CASE("builtin profiles") {
  const auto& names = profiles::builtin_names();
  for (const char* n : {"gauss_oscillatory", "gauss_decay_timelike", "compact_bump", "zero"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  for (const auto& n : names) CHECK_NOTHROW(profiles::builtin(n).validate());
  CHECK_THROWS_AS(profiles::builtin("nope"), std::invalid_argument);

  const RadialProfile g = profiles::gauss_oscillatory();
  CHECK(std::abs(g.timelike(1.5) - std::exp(Complex(0, 2.25))) < 1e-15);
  CHECK(std::abs(g.spacelike(1.5) - std::exp(Complex(0, -2.25))) < 1e-15);
  const RadialProfile d = profiles::gauss_decay_timelike();
  CHECK(std::abs(d.timelike(2.0) - std::exp(-4.0)) < 1e-16);
  CHECK(d.spacelike(0.3) == Complex{});
  const RadialProfile b = profiles::compact_bump();
  CHECK(b.timelike(0.5) == Complex(0.421875));
  CHECK(b.spacelike(1.0) == Complex{});
  CHECK(b.timelike(3.0) == Complex{});
  REQUIRE(b.support.has_value());
  CHECK(*b.support == 1.0);
  CHECK(profiles::compact_bump_timelike().spacelike(0.5) == Complex{});
  CHECK(profiles::compact_bump_spacelike().timelike(0.5) == Complex{});
}

TEST_CASE("tabulated profile interpolation") {
  std::vector<profiles::ProfileSample> s;
  for (double x : uniform(0.5, 3.0, 11)) s.push_back({x, {x * x, -x}, {std::exp(-x), 0.0}});
  const profiles::TabulatedProfile t(s);
  for (const auto& p : s) {
    CHECK(t.timelike(p.s) == p.timelike);
    CHECK(t.spacelike(p.s) == p.spacelike);
  }
  // held below the first node, zero beyond the last
  CHECK(t.timelike(0.0) == s.front().timelike);
  CHECK(t.spacelike(0.2) == s.front().spacelike);
  CHECK(t.timelike(3.01) == Complex{});
  // monotone data stays monotone between nodes
  double prev = -1;
  for (double x = 0.5; x <= 3.0; x += 0.01) {
    const double v = t.timelike(x).real();
    CHECK(v >= prev);
    prev = v;
  }
  CHECK(std::fabs(t.timelike(1.1).real() - 1.21) < 1e-3);
  const RadialProfile p = t.profile();
  REQUIRE(p.support.has_value());
  CHECK(*p.support == 3.0);
  CHECK(p.timelike(1.25) == t.timelike(1.25));

  CHECK_THROWS_AS(profiles::TabulatedProfile({s[0], s[1], s[2]}), std::invalid_argument);
  CHECK_THROWS_AS(profiles::TabulatedProfile({s[0], s[2], s[1], s[3]}), std::invalid_argument);
  CHECK_THROWS_AS(profiles::TabulatedProfile({{-1.0, {}, {}}, s[0], s[1], s[2]}), std::invalid_argument);
}

TEST_CASE("profile CSV round trip") {
  const std::vector<profiles::ProfileSample> s = io::sample_profile(profiles::gauss_oscillatory(), uniform(0, 4, 257));
  std::ostringstream a;
  io::write_profile_csv(a, s);
  std::istringstream in(a.str());
  const profiles::TabulatedProfile back = io::read_profile_csv(in);
  REQUIRE(back.samples().size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(back.samples()[i].s == s[i].s);
    CHECK(back.samples()[i].timelike == s[i].timelike);
    CHECK(back.samples()[i].spacelike == s[i].spacelike);
  }
  std::ostringstream b;
  io::write_profile_csv(b, back.samples());
  CHECK(a.str() == b.str());

  // transforms of the original table and the re-imported one
  const profiles::TabulatedProfile orig(s);
  const QuadConfig cfg;
  for (Character c : {Character::timelike, Character::spacelike}) {
    const TransformResult r1 = transform(1, orig.profile(), MomentumMagnitude(0.5, c), cfg);
    const TransformResult r2 = transform(1, back.profile(), MomentumMagnitude(0.5, c), cfg);
    CHECK(std::abs(r1.value() - r2.value()) <= 1e-12 * std::abs(r1.value()));
  }
}

TEST_CASE("profile CSV tolerates BOM, CRLF and blank lines") {
  const std::string csv = "\xEF\xBB\xBF" + std::string(io::profile_header) +
                          "\r\n0,1,0,1,0\r\n\r\n0.5,2,0,2,0\r\n1,+3,0,3,0\n1.5,4,0,4,-1e-3\n";
  std::istringstream in(csv);
  const auto s = io::read_profile_samples(in);
  REQUIRE(s.size() == 4);
  CHECK(s[1].s == 0.5);
  CHECK(s[2].timelike == Complex(3.0));
  CHECK(s[3].spacelike == Complex(4.0, -1e-3));
}

TEST_CASE("malformed profile CSV names the offending line") {
  CHECK(fails_on_line("", 1));
  CHECK(fails_on_line("s,a,b,c,d\n0,1,0,1,0\n", 1));
  CHECK(fails_on_line(header + "0,1,0,1\n", 2));
  CHECK(fails_on_line(header + "0,1,0,1,0\n0.5,x,0,1,0\n", 3));
  CHECK(fails_on_line(header + "0,1,0,1,0\n0.5,1,0,1,0,9\n", 3));
  CHECK(fails_on_line(header + "0.5,1,0,1,0\n0.5,1,0,1,0\n", 3));
  CHECK(fails_on_line(header + "-0.5,1,0,1,0\n", 2));
  CHECK(fails_on_line(header + "nan,1,0,1,0\n", 2));
  CHECK(fails_on_line(header + "0,1,0,1,0\n1,1e,0,1,0\n", 3));
  std::istringstream few(header + "0,1,0,1,0\n1,1,0,1,0\n");
  CHECK_THROWS_AS(io::read_profile_csv(few), std::invalid_argument);
  CHECK_THROWS_AS(io::read_profile_file("/nonexistent/profile.csv"), std::runtime_error);
}

TEST_CASE("spectrum CSV round trip") {
  const SpectrumTable t({{Character::timelike, 0.25, {1.0 / 3, -2e-300}, 1e-9, true},
                         {Character::timelike, 0.5, {-0.1, 0.7}, 0.0, false},
                         {Character::spacelike, 0.125, {0.0, -0.0}, 3.5e-7, true}});
  std::ostringstream a;
  io::write_spectrum_csv(a, t);
  CHECK(a.str().rfind(std::string(io::spectrum_header) + "\n", 0) == 0);
  CHECK(a.str().find(",false\n") != std::string::npos);
  std::istringstream in(a.str());
  const SpectrumTable back = io::read_spectrum_csv(in);
  REQUIRE(back.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back.rows()[i].character == t.rows()[i].character);
    CHECK(back.rows()[i].l == t.rows()[i].l);
    CHECK(back.rows()[i].value == t.rows()[i].value);
    CHECK(back.rows()[i].error == t.rows()[i].error);
    CHECK(back.rows()[i].converged == t.rows()[i].converged);
  }
  std::ostringstream b;
  io::write_spectrum_csv(b, back);
  CHECK(a.str() == b.str());

  std::istringstream bad(std::string(io::spectrum_header) + "\nlightlike,1,0,0,0,true\n");
  CHECK_THROWS_AS(io::read_spectrum_csv(bad), std::runtime_error);
  std::istringstream bad2(std::string(io::spectrum_header) + "\ntimelike,1,0,0,0,yes\n");
  CHECK_THROWS_AS(io::read_spectrum_csv(bad2), std::runtime_error);
}

TEST_CASE("format_double keeps every bit") {
  for (double v : {0.1, 1.0 / 3, 6.02214076e23, -2.5e-310, 1e300}) {
    const std::string s = io::format_double(v);
    double back = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(ec == std::errc{});
    CHECK(back == v);
  }
}
