#include "lorentz/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <system_error>

namespace lorentz::io {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw std::runtime_error("csv line " + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view field, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
    fail(line, "not a number: '" + std::string(field) + "'");
  return v;
}

bool getline_clean(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

std::string_view strip_bom(std::string_view s) {
  if (s.size() >= 3 && s.substr(0, 3) == "\xEF\xBB\xBF") s.remove_prefix(3);
  return s;
}

} // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<profiles::ProfileSample> read_profile_samples(std::istream& in) {
  std::string line;
  if (!getline_clean(in, line)) fail(1, "empty input");
  if (trim(strip_bom(line)) != profile_header) fail(1, std::string("expected header '") + profile_header + "'");
  std::vector<profiles::ProfileSample> out;
  std::size_t n = 1;
  while (getline_clean(in, line)) {
    ++n;
    if (trim(line).empty()) continue;
    const auto f = split(line);
    if (f.size() != 5) fail(n, "expected 5 fields, got " + std::to_string(f.size()));
    profiles::ProfileSample p{parse_double(f[0], n),
                              {parse_double(f[1], n), parse_double(f[2], n)},
                              {parse_double(f[3], n), parse_double(f[4], n)}};
    if (!(p.s >= 0) || !std::isfinite(p.s)) fail(n, "s must be finite and >= 0");
    if (!out.empty() && !(p.s > out.back().s)) fail(n, "s must be strictly increasing");
    out.push_back(p);
  }
  return out;
}

profiles::TabulatedProfile read_profile_csv(std::istream& in) {
  return profiles::TabulatedProfile(read_profile_samples(in));
}

profiles::TabulatedProfile read_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_profile_csv(in);
}

void write_profile_csv(std::ostream& out, const std::vector<profiles::ProfileSample>& samples) {
  out << profile_header << '\n';
  for (const auto& p : samples) {
    out << format_double(p.s) << ',' << format_double(p.timelike.real()) << ',' << format_double(p.timelike.imag())
        << ',' << format_double(p.spacelike.real()) << ',' << format_double(p.spacelike.imag()) << '\n';
  }
}

std::vector<profiles::ProfileSample> sample_profile(const RadialProfile& p, const std::vector<double>& s) {
  std::vector<profiles::ProfileSample> out;
  out.reserve(s.size());
  for (double v : s) out.push_back({v, p.timelike(v), p.spacelike(v)});
  return out;
}

void write_spectrum_csv(std::ostream& out, const SpectrumTable& table) {
  out << spectrum_header << '\n';
  for (const auto& r : table.rows()) {
    out << to_string(r.character) << ',' << format_double(r.l) << ',' << format_double(r.value.real()) << ','
        << format_double(r.value.imag()) << ',' << format_double(r.error) << ',' << (r.converged ? "true" : "false")
        << '\n';
  }
}

SpectrumTable read_spectrum_csv(std::istream& in) {
  std::string line;
  if (!getline_clean(in, line)) fail(1, "empty input");
  if (trim(strip_bom(line)) != spectrum_header) fail(1, std::string("expected header '") + spectrum_header + "'");
  std::vector<SpectrumRow> rows;
  std::size_t n = 1;
  while (getline_clean(in, line)) {
    ++n;
    if (trim(line).empty()) continue;
    const auto f = split(line);
    if (f.size() != 6) fail(n, "expected 6 fields, got " + std::to_string(f.size()));
    SpectrumRow r;
    const auto c = trim(f[0]);
    if (c == "timelike") r.character = Character::timelike;
    else if (c == "spacelike") r.character = Character::spacelike;
    else fail(n, "unknown character '" + std::string(c) + "'");
    r.l = parse_double(f[1], n);
    r.value = {parse_double(f[2], n), parse_double(f[3], n)};
    r.error = parse_double(f[4], n);
    const auto conv = trim(f[5]);
    if (conv == "true") r.converged = true;
    else if (conv == "false") r.converged = false;
    else fail(n, "converged must be true or false");
    rows.push_back(r);
  }
  return SpectrumTable(std::move(rows));
}

} // namespace lorentz::io
