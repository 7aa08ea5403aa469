#pragma once

#include <cmath>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ejm/basis.hpp"
#include "ejm/report.hpp"

namespace ejm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariantFailure = 1;
inline constexpr int kExitParameterError = 2;

struct RunConfig {
  std::string command;
  double z = 1.0 / std::sqrt(3.0);
  double phi = 0.7853981633974483;    // pi/4
  double theta = 1.0471975511965976;  // pi/3
  int grid = 6;
  report::Format format = report::Format::csv;
  std::optional<std::string> out;
  bool dump = false;
  // EJM_TOLERANCE; only drives the within_report_tolerance column.
  std::optional<double> report_tolerance;
};

enum class CheckStatus { pass, fail, degenerate };

struct Check {
  std::string name;
  double value = 0.0;  // NaN when degenerate
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::pass;
};

// Orthonormality, completeness, construction-path agreement, reduced-state and
// concurrence checks at one parameter triple.
std::vector<Check> basis_checks(const basis::EjmParams& p);

// Preparation fidelity and detection outcome checks at one parameter triple.
std::vector<Check> circuit_checks(const basis::EjmParams& p);

struct CommandResult {
  report::Table table;
  int exit_code = kExitOk;
};

CommandResult cmd_basis(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_sweep(const RunConfig& cfg);
CommandResult cmd_table1(const RunConfig& cfg);
CommandResult cmd_concurrence(const RunConfig& cfg);
CommandResult cmd_circuit(const RunConfig& cfg);

// Serialized preparation (state 0) and detection circuits, with '#' headers.
std::string circuit_dump(const basis::EjmParams& p);

// Parses `args` (without the program name) and runs one subcommand. Returns the
// process exit code: 0 success, 1 invariant failure, 2 parameter or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ejm::cli
