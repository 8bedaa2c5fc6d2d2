#pragma once

// Batch jobs: a small key=value file with the polynomials in a fenced block,
// run end to end into a JSON report plus a process exit code.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "igusa/oracle.hpp"

namespace igusa {

enum class Mode { Zeta, Zeta0, Poles, Poincare, ExpSum, Congruence, Check, All };

struct JobConfig {
  std::vector<std::string> vars;
  std::vector<std::string> polys;  // last entry is f_l
  std::uint64_t prime = 0;
  Mode mode = Mode::All;
  std::size_t depth = 3;
  std::size_t expsum_levels = 4;
  double budget = kDefaultBudget;
  bool json_output = false;
  Region region = Region::Full;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int hypothesis = 2;
inline constexpr int oracle_mismatch = 3;
inline constexpr int budget = 4;
}  // namespace exit_code

/// Parses the job file format:
///   # comment
///   vars = x, y, z
///   prime = 5
///   mode = poles
///   ```polys
///   x+y-z
///   x^8+y^8+z^8+x^2*y^2*z^2
///   ```
/// Throws ParseError; the position is the 1-based line number.
JobConfig parse_job(const std::string& text);

Mode parse_mode(const std::string& s);
std::string to_string(Mode m);

struct JobResult {
  std::string json;  // the report, pretty-printed with a fixed key order
  std::string text;
  int exit_code = exit_code::ok;
};

/// Runs every stage the mode asks for. Library errors are caught and turned
/// into an "error" entry plus the matching exit code.
JobResult run_job(const JobConfig& cfg);

}  // namespace igusa
