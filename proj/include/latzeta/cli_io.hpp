#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "latzeta/arithmetic.hpp"
#include "latzeta/asymptotics.hpp"
#include "latzeta/continuation.hpp"
#include "latzeta/errors.hpp"
#include "latzeta/precision.hpp"
#include "latzeta/validation.hpp"
#include "latzeta/zero_finder.hpp"

namespace latzeta {

enum class OutputFormat { csv, json };

struct RunConfig {
  PrecisionPolicy precision;
  SearchWindow window;
  real_t delta_min = 0.05;
  real_t delta_max = 0.99;
  real_t step = 0.01;
  std::string output_dir;  // empty: stdout where a single stream makes sense
  OutputFormat output_format = OutputFormat::csv;
  int digits = 12;  // significant digits of every printed number

  void validate() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitPole = 3;

[[nodiscard]] int exit_code(ErrorKind kind) noexcept;

/// "a+bi", "a-bi", "a", "bi", "-i"; whitespace is not allowed.
[[nodiscard]] complex_t parse_complex(std::string_view text);
/// Decimal or "p/q". A fraction is divided once in binary64, which yields the
/// same double as the literal 1.0/3.0 used by the special-value paths.
[[nodiscard]] real_t parse_delta(std::string_view text);
/// "x0,x1,y0,y1".
[[nodiscard]] SearchWindow parse_window(std::string_view text);
[[nodiscard]] std::vector<real_t> parse_real_list(std::string_view text);
[[nodiscard]] std::vector<int> parse_int_list(std::string_view text);

/// printf %.{digits}g, with -0 printed as 0.
[[nodiscard]] std::string format_real(real_t x, int digits = 12);
[[nodiscard]] std::string format_complex(complex_t z, int digits = 12);

void write_scan_csv(std::ostream& out, const std::vector<ZeroRecord>& zeros, int digits);
void write_scan_json(std::ostream& out, real_t delta, const std::vector<ZeroRecord>& zeros,
                     int digits);
/// Rows restricted to delta_lo <= delta <= delta_hi.
void write_branch_csv(std::ostream& out, const BranchCurve& curve, int digits,
                      real_t delta_lo = 0.0, real_t delta_hi = 1.0);
[[nodiscard]] std::string sweep_manifest(const std::vector<BranchCurve>& curves,
                                         const RunConfig& config);
void write_deviation_csv(std::ostream& out, const std::vector<DeviationRow>& rows, int digits);
[[nodiscard]] std::string validation_report(const std::vector<SuiteResult>& suites, int digits);

/// Full command-line entry point; args excludes the program name.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace latzeta
