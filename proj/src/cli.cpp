#include "lorentz/cli.hpp"

#include "lorentz/io.hpp"
#include "lorentz/profiles.hpp"
#include "lorentz/validation.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace lorentz::cli {

namespace {

// Parses `args` into `app`. Returns -1 when the command should go on, or an
// exit code when it should stop (help printed, or a usage error).
int parse(CLI::App& app, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Exit::ok;
  } catch (const CLI::ParseError& e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return Exit::usage;
  }
  return -1;
}

QuadConfig make_config(double tol, double epsilon0) {
  QuadConfig cfg;
  const int count = static_cast<int>(cfg.epsilon_schedule.size());
  cfg.abs_tol = cfg.rel_tol = tol;
  cfg.epsilon_schedule = QuadConfig::geometric_schedule(epsilon0, count);
  cfg.validate();
  return cfg;
}

} // namespace

RadialProfile load_profile(const std::string& source) {
  const auto colon = source.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("profile must be builtin:<name> or csv:<path>, got '" + source + "'");
  const std::string kind = source.substr(0, colon), rest = source.substr(colon + 1);
  if (kind == "builtin") return profiles::builtin(rest);
  if (kind == "csv") return io::read_profile_file(rest).profile();
  throw std::invalid_argument("unknown profile source '" + kind + "'");
}

std::vector<double> make_grid(double kmin, double kmax, int kcount, bool logarithmic) {
  if (kcount < 0) throw std::invalid_argument("grid count must be >= 0");
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(kcount));
  for (int i = 0; i < kcount; ++i) {
    if (kcount == 1) {
      g.push_back(kmin);
    } else if (logarithmic) {
      g.push_back(kmin * std::pow(kmax / kmin, static_cast<double>(i) / (kcount - 1)));
    } else {
      g.push_back(kmin + (kmax - kmin) * i / (kcount - 1));
    }
  }
  if (kcount > 1) g.back() = kmax;
  return g;
}

int cmd_transform(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const QuadConfig defaults;
  CLI::App app{"Fourier transform of a Lorentz-invariant profile on a momentum grid", "transform"};
  int n = 1;
  std::string profile, character = "timelike", grid = "linear";
  double kmin = 0.25, kmax = 1.0, tol = defaults.abs_tol, epsilon0 = defaults.epsilon_schedule.front();
  int kcount = 3;
  unsigned threads = 0;
  app.add_option("--n", n, "spatial dimension, 1..10")->capture_default_str();
  app.add_option("--profile", profile, "builtin:<name> or csv:<path>")->required();
  app.add_option("--char", character, "momentum character")
      ->check(CLI::IsMember({"timelike", "spacelike"}))
      ->capture_default_str();
  app.add_option("--kmin", kmin)->capture_default_str();
  app.add_option("--kmax", kmax)->capture_default_str();
  app.add_option("--kcount", kcount)->capture_default_str();
  app.add_option("--grid", grid, "grid spacing")->check(CLI::IsMember({"linear", "log"}))->capture_default_str();
  app.add_option("--tol", tol, "absolute and relative tolerance")->capture_default_str();
  app.add_option("--epsilon0", epsilon0, "first damping parameter")->capture_default_str();
  app.add_option("--threads", threads, "worker threads, 0 = hardware concurrency")->capture_default_str();
  if (const int rc = parse(app, args, out, err); rc >= 0) return rc;

  try {
    if (n < 1 || n > kernels::max_dimension) throw std::invalid_argument("--n must lie in [1, 10]");
    if (!(kmin > 0) || !std::isfinite(kmin) || !std::isfinite(kmax)) throw std::invalid_argument("--kmin must be > 0");
    if (kcount < 1) throw std::invalid_argument("--kcount must be >= 1");
    if (kcount > 1 && !(kmax > kmin)) throw std::invalid_argument("--kmax must exceed --kmin");
    if (!(tol > 0)) throw std::invalid_argument("--tol must be > 0");
    if (!(epsilon0 > 0) || !std::isfinite(epsilon0)) throw std::invalid_argument("--epsilon0 must be > 0");
  } catch (const std::exception& e) {
    err << "transform: " << e.what() << '\n';
    return Exit::usage;
  }

  RadialProfile p;
  QuadConfig cfg;
  try {
    p = load_profile(profile);
    p.validate();
    cfg = make_config(tol, epsilon0);
  } catch (const std::exception& e) {
    err << "transform: " << e.what() << '\n';
    return Exit::usage;
  }

  const Character c = character == "timelike" ? Character::timelike : Character::spacelike;
  std::vector<MomentumMagnitude> ls;
  for (double k : make_grid(kmin, kmax, kcount, grid == "log")) ls.emplace_back(k, c);
  const SpectrumTable table = spectrum(n, p, ls, cfg, threads);
  io::write_spectrum_csv(out, table);
  if (!table.all_converged()) {
    err << "transform: some grid points did not converge\n";
    return Exit::failure;
  }
  return Exit::ok;
}

int cmd_validate(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const QuadConfig defaults;
  CLI::App app{"Run a validation suite", "validate"};
  std::string suite;
  double tol = defaults.abs_tol, epsilon0 = defaults.epsilon_schedule.front();
  std::vector<std::string> names = validation::suite_names();
  names.push_back("all");
  app.add_option("--suite", suite)->required()->check(CLI::IsMember(names));
  app.add_option("--tol", tol, "quadrature tolerance")->capture_default_str();
  app.add_option("--epsilon0", epsilon0, "first damping parameter")->capture_default_str();
  if (const int rc = parse(app, args, out, err); rc >= 0) return rc;

  QuadConfig cfg;
  try {
    if (!(tol > 0)) throw std::invalid_argument("--tol must be > 0");
    cfg = make_config(tol, epsilon0);
  } catch (const std::exception& e) {
    err << "validate: " << e.what() << '\n';
    return Exit::usage;
  }

  bool all_pass = true;
  out << "suite,check,expected_re,expected_im,actual_re,actual_im,gap,tolerance,result\n";
  for (const auto& report : validation::run(suite, cfg)) {
    for (const auto& c : report.checks) {
      out << report.suite << ',' << c.name << ',' << io::format_double(c.expected.real()) << ','
          << io::format_double(c.expected.imag()) << ',' << io::format_double(c.actual.real()) << ','
          << io::format_double(c.actual.imag()) << ',' << io::format_double(c.gap) << ','
          << io::format_double(c.tolerance) << ',' << (c.pass ? "PASS" : "FAIL") << '\n';
    }
    const bool pass = report.passed();
    all_pass = all_pass && pass;
    char line[160];
    std::snprintf(line, sizeof line, "# %s: %s, %zu checks, max gap %.3g, %.1f s\n", report.suite.c_str(),
                  pass ? "PASS" : "FAIL", report.checks.size(), report.max_gap(), report.seconds);
    err << line;
  }
  return all_pass ? Exit::ok : Exit::failure;
}

int cmd_chi(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sample the Hankel kernel chi_n(k, r) over r", "chi"};
  int n = 1, rcount = 11;
  double k = 1.0, rmin = 0.0, rmax = 1.0;
  app.add_option("--n", n, "dimension, 1..23")->capture_default_str();
  app.add_option("--k", k)->capture_default_str();
  app.add_option("--rmin", rmin)->capture_default_str();
  app.add_option("--rmax", rmax)->capture_default_str();
  app.add_option("--rcount", rcount)->capture_default_str();
  if (const int rc = parse(app, args, out, err); rc >= 0) return rc;
  try {
    if (n < 1 || n > 23) throw std::invalid_argument("--n must lie in [1, 23]");
    if (!(k > 0) || !std::isfinite(k)) throw std::invalid_argument("--k must be > 0");
    if (!(rmin >= 0) || !std::isfinite(rmax)) throw std::invalid_argument("--rmin must be >= 0");
    if (rcount < 0) throw std::invalid_argument("--rcount must be >= 0");
    if (rcount > 1 && !(rmax > rmin)) throw std::invalid_argument("--rmax must exceed --rmin");
  } catch (const std::exception& e) {
    err << "chi: " << e.what() << '\n';
    return Exit::usage;
  }
  out << "r,chi\n";
  for (double r : make_grid(rmin, rmax, rcount, false))
    out << io::format_double(r) << ',' << io::format_double(kernels::chi_dual(n, k, r)) << '\n';
  return Exit::ok;
}

int cmd_sample(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Write a profile as CSV on a uniform s grid", "sample"};
  std::string profile;
  double smax = 1.0;
  int scount = 101;
  app.add_option("--profile", profile, "builtin:<name> or csv:<path>")->required();
  app.add_option("--smax", smax)->capture_default_str();
  app.add_option("--scount", scount, "at least 4")->capture_default_str();
  if (const int rc = parse(app, args, out, err); rc >= 0) return rc;
  RadialProfile p;
  try {
    if (!(smax > 0) || !std::isfinite(smax)) throw std::invalid_argument("--smax must be > 0");
    if (scount < 4) throw std::invalid_argument("--scount must be >= 4");
    p = load_profile(profile);
  } catch (const std::exception& e) {
    err << "sample: " << e.what() << '\n';
    return Exit::usage;
  }
  io::write_profile_csv(out, io::sample_profile(p, make_grid(0.0, smax, scount, false)));
  return Exit::ok;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  static const char* usage_text =
      "usage: lorentz_ft <transform|validate|chi|sample> [options]\n"
      "       lorentz_ft <command> --help\n";
  if (args.empty()) {
    err << usage_text;
    return Exit::usage;
  }
  const std::string& cmd = args.front();
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  if (cmd == "transform") return cmd_transform(rest, out, err);
  if (cmd == "validate") return cmd_validate(rest, out, err);
  if (cmd == "chi") return cmd_chi(rest, out, err);
  if (cmd == "sample") return cmd_sample(rest, out, err);
  if (cmd == "--help" || cmd == "-h") {
    out << usage_text;
    return Exit::ok;
  }
  err << "unknown command '" << cmd << "'\n" << usage_text;
  return Exit::usage;
}

} // namespace lorentz::cli
