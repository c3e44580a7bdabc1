#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zetasum/hankel.hpp"
#include "zetasum/lerch.hpp"
#include "zetasum/series.hpp"
#include "zetasum/special_core.hpp"

// Command-line front end: verbs eval, check, oracle and sweep.
//
// Exit codes: 0 success, 1 usage error, 2 domain error, 3 convergence
// failure, 4 an identity check failed its tolerance.
//
// Settings come from defaults, then the JSON file named by --config (or by
// the ZETASUM_CONFIG environment variable when --config is absent), then
// individual flags.

namespace zetasum::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kConvergence = 3, kCheckFailed = 4 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  ContourSpec contour;
  SeriesConfig series;
  LerchConfig lerch;
  EulerMaclaurinConfig euler_maclaurin;
};

/// Applies a JSON config document; unknown keys are a UsageError.
void apply_config(Settings& settings, const std::string& json_text);

/// "x" or "re,im".
Complex parse_scalar(std::string_view text);

/// A scalar, a ';'-separated list of scalars, or linspace(lo,hi,n).
std::vector<Complex> parse_values(std::string_view text);

/// %.17g, so that the printed value parses back to the same double.
std::string format_number(double x);

/// Scalar in the "x" / "re,im" syntax accepted by parse_scalar.
std::string format_scalar(Complex z);

/// Names accepted by eval, oracle and sweep.
std::vector<std::string> target_names();

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zetasum::cli
