#include "ejm/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "ejm/errors.hpp"

namespace ejm::cli {
namespace {

struct Subcommand {
  const char* name;
  const char* description;
  CommandResult (*handler)(const RunConfig&);
};

constexpr Subcommand kSubcommands[] = {
    {"basis", "Print the four basis states as amplitude tables", cmd_basis},
    {"verify", "Check orthonormality, completeness, reduced states and concurrence at one point", cmd_verify},
    {"sweep", "Run every check over a grid of (z, phi, theta) and report the maxima", cmd_sweep},
    {"table1", "Reproduce the unit-vector and reduced-state table for z = 1/sqrt(3), 1/sqrt(2), 1", cmd_table1},
    {"concurrence", "Emit concurrence over a in [0, 2], theta in [0, pi/2], plus the a = sqrt(3) slice", cmd_concurrence},
    {"circuit", "Simulate the preparation and detection circuits", cmd_circuit},
};

std::optional<double> tolerance_from_env(std::ostream& err, bool& bad) {
  const char* raw = std::getenv("EJM_TOLERANCE");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (*end != '\0' || !std::isfinite(v) || v <= 0.0) {
    err << "error: EJM_TOLERANCE must be a positive number (got '" << raw << "')\n";
    bad = true;
    return std::nullopt;
  }
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elegant joint measurement basis construction, verification and circuit simulation", "ejm"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "csv";
  std::string out_path;
  const Subcommand* chosen = nullptr;
  std::vector<std::pair<CLI::App*, const Subcommand*>> subs;

  for (const Subcommand& s : kSubcommands) {
    CLI::App* sub = app.add_subcommand(s.name, s.description);
    sub->add_option("--z", cfg.z, "Bloch z component, 1/sqrt(3) <= |z| <= 1")->capture_default_str();
    sub->add_option("--phi", cfg.phi, "Azimuth in radians (wrapped onto [-pi, pi])")->capture_default_str();
    sub->add_option("--theta", cfg.theta, "Entangling angle in radians, [0, pi/2]")->capture_default_str();
    sub->add_option("--grid", cfg.grid, "Samples per axis for sweep and concurrence")
        ->check(CLI::Range(2, 100000))
        ->capture_default_str();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
    if (std::string_view(s.name) == "circuit") {
      sub->add_flag("--dump", cfg.dump, "Print the serialized circuits instead of the report");
    }
    subs.emplace_back(sub, &s);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParameterError;
  }

  for (const auto& [sub, s] : subs)
    if (sub->parsed()) chosen = s;
  cfg.command = chosen->name;
  cfg.format = format == "json" ? report::Format::json : report::Format::csv;
  if (!out_path.empty()) cfg.out = out_path;

  bool bad_env = false;
  cfg.report_tolerance = tolerance_from_env(err, bad_env);
  if (bad_env) return kExitParameterError;

  CommandResult result;
  std::string text;
  try {
    const basis::EjmParams p = basis::EjmParams::make(cfg.z, cfg.phi, cfg.theta);
    result = chosen->handler(cfg);
    text = cfg.dump ? circuit_dump(p) : report::render(result.table, cfg.format);
  } catch (const ParameterRangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameterError;
  } catch (const std::exception& e) {
    err << "error: " << cfg.command << ": " << e.what() << '\n';
    return kExitInvariantFailure;
  }

  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << *cfg.out << "' for writing\n";
      return kExitParameterError;
    }
    file << text;
  } else {
    out << text;
  }

  if (result.exit_code != kExitOk) err << cfg.command << ": one or more checks failed\n";
  return result.exit_code;
}

}  // namespace ejm::cli
