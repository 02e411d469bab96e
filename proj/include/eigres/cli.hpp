#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "eigres/functionals.hpp"
#include "eigres/geometry.hpp"

namespace eigres::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kChecksFailed = 1, kUsage = 2, kNumeric = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `equator`, `tilted:<alpha>`, `geodesic:<p>,<q>[,<offset>]`.
CurveSpec parse_curve(const std::string& text);
/// `l,m`.
HarmonicIndex parse_index(const std::string& text);
/// `m,n[;m,n...]`, equal weights normalized to unit L2 norm.
TorusWave parse_modes(const std::string& text);
/// `center,halfwidth`.
Window parse_window(const std::string& text);

/// Runs one invocation; `args` excludes the program name. Data goes to `out`
/// (or to --out), diagnostics and experiment summaries to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eigres::cli
