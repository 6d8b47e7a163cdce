#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddsratio/report.hpp"
#include "oddsratio/simulation.hpp"

namespace oddsratio {

/// Parsed and validated command-line invocation.
struct RunConfig {
  enum class Mode { estimate, simulate };

  Mode mode = Mode::simulate;

  // estimate mode
  double cell_a = 0.0, cell_b = 0.0, cell_c = 0.0, cell_d = 0.0;
  double continuity = 0.0;

  // simulate mode
  StudyDesign design;

  SimulationSettings settings;
  OutputFormat output_format = OutputFormat::markdown;
  unsigned threads = 0;
  std::string dump_replications;  ///< empty = off
  std::string output_path;        ///< empty = stdout

  bool operator==(const RunConfig&) const = default;
};

/// Raised on bad flags, out-of-range values, or missing required fields.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what, int code = 2)
      : std::runtime_error(what), exit_code(code) {}
  int exit_code;
};

/// Parses argv-style arguments (without the program name). Flags override
/// config-file values; see --config. Throws UsageError on any problem;
/// a --help request surfaces as UsageError with exit_code 0 and the help
/// text as the message.
RunConfig parse_config(const std::vector<std::string>& args);

/// Full CLI entry point: parse, run, render to `out`, errors to `err`.
/// Returns the process exit status (0 on success).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace oddsratio
