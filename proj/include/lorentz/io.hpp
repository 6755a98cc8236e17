#pragma once

#include "lorentz/profiles.hpp"
#include "lorentz/transform.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lorentz::io {

/// %.17g, so that a double survives a text round trip exactly.
std::string format_double(double v);

inline constexpr const char* profile_header = "s,re_timelike,im_timelike,re_spacelike,im_spacelike";
inline constexpr const char* spectrum_header = "char,l,re,im,err,converged";

/// Parses the profile format. Throws std::runtime_error naming the line on
/// malformed input.
std::vector<profiles::ProfileSample> read_profile_samples(std::istream& in);
profiles::TabulatedProfile read_profile_csv(std::istream& in);
profiles::TabulatedProfile read_profile_file(const std::string& path);

void write_profile_csv(std::ostream& out, const std::vector<profiles::ProfileSample>& samples);

/// Samples both branches of `p` at the given radii.
std::vector<profiles::ProfileSample> sample_profile(const RadialProfile& p, const std::vector<double>& s);

void write_spectrum_csv(std::ostream& out, const SpectrumTable& table);
SpectrumTable read_spectrum_csv(std::istream& in);

} // namespace lorentz::io
