#pragma once

// Subcommands of the equiareal tool. Each returns a JSON report and an exit
// code: 0 success, 1 verification failure, 2 invalid or degenerate input.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "equiareal/algebra/rational.hpp"
#include "equiareal/heights/height.hpp"

namespace equiareal::cli {

using Json = nlohmann::ordered_json;
using algebra::Rational;

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& name);

/// sol1, sol2 (curves attached to the solutions) or et (the scaled family).
enum class CurveFamilyKind { Sol1, Sol2, Et };
CurveFamilyKind parse_curve_family(const std::string& name);
std::string to_string(CurveFamilyKind f);

inline constexpr const char* kPrecisionEnv = "EQUIAREAL_PRECISION";

struct RunConfig {
  unsigned precision = algebra::kDefaultPrecisionBits;
  heights::Normalization normalization = heights::Normalization::Unhalved;
  Format format = Format::Json;
  std::string out;  // empty: standard output
  unsigned jobs = 1;
};

/// Default precision, overridden by EQUIAREAL_PRECISION when set.
unsigned default_precision();

struct Report {
  Json body;
  int exit_code = 0;
};

Report cmd_verify(const std::string& suite, const RunConfig& cfg);
Report cmd_triangles(CurveFamilyKind family, const Rational& t, const RunConfig& cfg);
Report cmd_curve(CurveFamilyKind family, const Rational& t, const RunConfig& cfg);
Report cmd_regulator(CurveFamilyKind family, const Rational& t, const RunConfig& cfg);
Report cmd_generators(const Rational& t, const RunConfig& cfg);
Report cmd_gtcheck(const Rational& t, const RunConfig& cfg);
Report cmd_scan(CurveFamilyKind family, const std::vector<Rational>& grid, const RunConfig& cfg);

/// The eleven parameters listed for rank 8 and rank 9 members of E_t.
const std::vector<Rational>& high_rank_parameters();

/// "a,b,c" or "lo:hi:step" (inclusive, rational step).
std::vector<Rational> parse_grid(const std::string& spec);

std::string render(const Report& r, Format format);

/// Full command line entry point; writes the rendered report to `out` or to
/// --out, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace equiareal::cli
