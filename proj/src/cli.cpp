#include "oddsratio/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "oddsratio/errors.hpp"

namespace oddsratio {

namespace {

MethodSet parse_methods(const std::string& list) {
  MethodSet set;
  std::stringstream stream(list);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) {
      continue;
    }
    const auto m = method_from_name(item);
    if (!m) {
      throw UsageError("unknown method '" + item +
                       "' (expected standard, pctl-boot, pctl-calc, "
                       "barendregt)");
    }
    set.insert(*m);
  }
  if (set.empty()) {
    throw UsageError("--methods selected no methods");
  }
  return set;
}

struct RawOptions {
  std::string methods = "standard,pctl-boot,pctl-calc,barendregt";
  std::string format = "markdown";
  std::string config_path;
};

void add_common_flags(CLI::App& cmd, RunConfig& cfg, RawOptions& raw) {
  cmd.add_option("--alpha", cfg.settings.alpha,
                 "Two-sided confidence level complement (default 0.05)");
  cmd.add_option("--pbs", cfg.settings.pbs_count,
                 "Bootstrap draws per estimate (default 1000)");
  cmd.add_option("--seed", cfg.settings.seed, "RNG seed (default 0)");
  cmd.add_option("--methods", raw.methods,
                 "Comma-separated subset of "
                 "standard,pctl-boot,pctl-calc,barendregt");
  cmd.add_option("--format", raw.format, "markdown, csv, or structured");
  cmd.add_option("--output", cfg.output_path,
                 "Write the report here instead of stdout");
  cmd.add_option("--config", raw.config_path,
                 "Flat key=value file mirroring the flag names; flags win "
                 "on conflict");
}

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

/// Expands `--config <file>` into flag/value pairs inserted ahead of the
/// explicit flags, so that command-line values win under the take-last
/// policy.
std::vector<std::string> expand_config_file(
    const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty()) {
    return args;
  }

  std::ifstream file(path);
  if (!file) {
    throw UsageError("cannot read config file '" + path + "'");
  }
  std::vector<std::string> from_file;
  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    const std::string entry = trim(line);
    if (entry.empty() || entry[0] == '#') {
      continue;
    }
    const auto eq = entry.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config file '" + path + "' line " +
                       std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(entry.substr(0, eq));
    const std::string value = trim(entry.substr(eq + 1));
    if (key.empty()) {
      throw UsageError("config file '" + path + "' line " +
                       std::to_string(line_no) + ": empty key");
    }
    from_file.push_back("--" + key);
    from_file.push_back(value);
  }

  // keep the subcommand token first
  std::vector<std::string> expanded;
  expanded.reserve(args.size() + from_file.size());
  expanded.push_back(args.front());
  expanded.insert(expanded.end(), from_file.begin(), from_file.end());
  expanded.insert(expanded.end(), args.begin() + 1, args.end());
  return expanded;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig cfg;
  RawOptions raw;

  CLI::App app{"Odds-ratio point/interval estimation and Monte Carlo "
               "coverage studies for 2x2 tables"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  CLI::App* est = app.add_subcommand(
      "estimate", "Estimate the odds ratio from a single 2x2 table");
  est->add_option("--a", cfg.cell_a, "Cell a (D=0, E=0)")->required();
  est->add_option("--b", cfg.cell_b, "Cell b (D=1, E=0)")->required();
  est->add_option("--c", cfg.cell_c, "Cell c (D=0, E=1)")->required();
  est->add_option("--d", cfg.cell_d, "Cell d (D=1, E=1)")->required();
  est->add_option("--continuity", cfg.continuity,
                  "Add this value to every cell first (default 0)");
  add_common_flags(*est, cfg, raw);

  CLI::App* sim = app.add_subcommand(
      "simulate", "Run a Monte Carlo coverage study for a prospective design");
  sim->add_option("--n", cfg.design.n, "Subjects per replication")->required();
  sim->add_option("--p-exposure", cfg.design.p_exposure,
                  "P(E=1) (default 0.5)");
  sim->add_option("--p-d-exposed", cfg.design.p_disease_exposed,
                  "P(D=1|E=1)")
      ->required();
  sim->add_option("--p-d-unexposed", cfg.design.p_disease_unexposed,
                  "P(D=1|E=0)")
      ->required();
  sim->add_option("--mc", cfg.settings.mc_count,
                  "Monte Carlo replications (default 200000)");
  sim->add_option("--threads", cfg.threads,
                  "Worker threads, 0 = all cores; never changes results");
  sim->add_option("--dump-replications", cfg.dump_replications,
                  "Stream per-replication rows to this CSV file");
  add_common_flags(*sim, cfg, raw);

  const std::vector<std::string> expanded =
      args.empty() ? args : expand_config_file(args);
  std::vector<const char*> argv;
  argv.reserve(expanded.size() + 1);
  argv.push_back("orsim");
  for (const std::string& a : expanded) {
    argv.push_back(a.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    throw UsageError(code == 0 ? out.str() : err.str(), code);
  }

  cfg.mode = sim->parsed() ? RunConfig::Mode::simulate
                           : RunConfig::Mode::estimate;
  cfg.settings.methods = parse_methods(raw.methods);
  if (const auto f = format_from_name(raw.format)) {
    cfg.output_format = *f;
  } else {
    throw UsageError("unknown format '" + raw.format +
                     "' (expected markdown, csv, or structured)");
  }

  try {
    if (cfg.mode == RunConfig::Mode::simulate) {
      validate_design(cfg.design);
      validate_settings(cfg.settings);
    } else {
      // Construction checks the cells; range-check the rest here.
      ContingencyTable probe(cfg.cell_a, cfg.cell_b, cfg.cell_c, cfg.cell_d);
      (void)probe;
      if (!(cfg.continuity >= 0.0)) {
        throw InvalidCell("--continuity must be nonnegative");
      }
      if (!(cfg.settings.alpha > 0.0 && cfg.settings.alpha < 1.0)) {
        throw InvalidProbability("--alpha must lie in (0, 1)");
      }
      if (cfg.settings.pbs_count < 2) {
        throw InvalidSettings("--pbs must be at least 2");
      }
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

namespace {

std::vector<EstimateWithCI> estimate_all(const RunConfig& cfg) {
  const ContingencyTable raw(cfg.cell_a, cfg.cell_b, cfg.cell_c, cfg.cell_d);
  const ContingencyTable table = apply_continuity(raw, cfg.continuity);
  RandomStream stream(cfg.settings.seed, 0);
  std::vector<EstimateWithCI> estimates;
  for (Method m : cfg.settings.methods.ordered()) {
    switch (m) {
      case Method::standard:
        estimates.push_back(standard_estimate(table, cfg.settings.alpha));
        break;
      case Method::pctl_boot:
        estimates.push_back(percentile_bootstrap_estimate(
            table, cfg.settings.alpha, cfg.settings.pbs_count, stream));
        break;
      case Method::pctl_calc:
        estimates.push_back(
            percentile_calc_estimate(table, cfg.settings.alpha));
        break;
      case Method::barendregt:
        estimates.push_back(barendregt_estimate(table, cfg.settings.alpha));
        break;
    }
  }
  return estimates;
}

int write_text(const std::string& text, const std::string& path,
               std::ostream& fallback, std::ostream& err) {
  if (path.empty()) {
    fallback << text;
    return 0;
  }
  std::ofstream file(path);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return 1;
  }
  file << text;
  return file.good() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const UsageError& e) {
    (e.exit_code == 0 ? out : err) << e.what() << "\n";
    return e.exit_code;
  }

  try {
    if (cfg.mode == RunConfig::Mode::simulate) {
      ReplicationLog log;
      ReplicationLog* log_ptr =
          cfg.dump_replications.empty() ? nullptr : &log;
      const SimulationReport report =
          run_simulation(cfg.design, cfg.settings, cfg.threads, log_ptr);
      std::string text;
      switch (cfg.output_format) {
        case OutputFormat::markdown:
          text = render_markdown(report);
          break;
        case OutputFormat::csv:
          text = render_csv(report);
          break;
        case OutputFormat::structured:
          text = render_structured(report);
          break;
      }
      if (log_ptr != nullptr) {
        const int rc = write_text(log.csv(), cfg.dump_replications, out, err);
        if (rc != 0) {
          return rc;
        }
      }
      return write_text(text, cfg.output_path, out, err);
    }

    const std::vector<EstimateWithCI> estimates = estimate_all(cfg);
    const ContingencyTable table = apply_continuity(
        ContingencyTable(cfg.cell_a, cfg.cell_b, cfg.cell_c, cfg.cell_d),
        cfg.continuity);
    std::string text;
    switch (cfg.output_format) {
      case OutputFormat::markdown:
        text = render_estimates_markdown(table, estimates);
        break;
      case OutputFormat::csv:
        text = render_estimates_csv(estimates);
        break;
      case OutputFormat::structured:
        text = render_estimates_structured(table, estimates);
        break;
    }
    return write_text(text, cfg.output_path, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace oddsratio
