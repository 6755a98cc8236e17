#pragma once

#include "lorentz/transform.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lorentz::cli {

/// Exit codes shared by every command.
enum Exit : int { ok = 0, failure = 1, usage = 2 };

/// "builtin:<name>" or "csv:<path>". Throws std::invalid_argument for an
/// unknown builtin and std::runtime_error for an unreadable or malformed file.
RadialProfile load_profile(const std::string& source);

/// kcount points from kmin to kmax, linear or geometric.
std::vector<double> make_grid(double kmin, double kmax, int kcount, bool logarithmic);

/// Each command takes its arguments without the command name.
int cmd_transform(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmd_validate(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmd_chi(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
/// Writes a profile as CSV on a uniform grid in s.
int cmd_sample(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Dispatches on args[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lorentz::cli
