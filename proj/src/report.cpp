#include "oddsratio/report.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace oddsratio {

namespace {

using json = nlohmann::ordered_json;

std::string fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
  return buffer;
}

std::string full(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

json settings_to_json(const SimulationSettings& s) {
  json methods = json::array();
  for (Method m : s.methods.ordered()) {
    methods.push_back(method_name(m));
  }
  return json{{"mc_count", s.mc_count},
              {"pbs_count", s.pbs_count},
              {"alpha", s.alpha},
              {"seed", s.seed},
              {"methods", std::move(methods)}};
}

json summary_to_json(const MethodSummary& s) {
  return json{{"method", method_name(s.method)},
              {"mean_point", s.mean_point},
              {"one_minus_coverage", s.one_minus_coverage},
              {"miss_high", s.miss_high},
              {"miss_low", s.miss_low},
              {"mean_lower", s.mean_lower},
              {"mean_upper", s.mean_upper},
              {"mean_width", s.mean_width},
              {"empirical_power", s.empirical_power},
              {"replication_count", s.replication_count}};
}

Method method_from_json(const json& j) {
  const auto name = j.get<std::string>();
  if (auto m = method_from_name(name)) {
    return *m;
  }
  throw std::invalid_argument("unknown method name: " + name);
}

}  // namespace

std::string_view format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::markdown:
      return "markdown";
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::structured:
      return "structured";
  }
  return "unknown";
}

std::optional<OutputFormat> format_from_name(std::string_view name) {
  for (OutputFormat f : {OutputFormat::markdown, OutputFormat::csv,
                         OutputFormat::structured}) {
    if (format_name(f) == name) {
      return f;
    }
  }
  return std::nullopt;
}

std::string render_markdown(const SimulationReport& r) {
  std::string out;
  out += "# Odds-ratio Monte Carlo simulation report\n\n";
  out += "Design: n=" + std::to_string(r.design.n) +
         ", P(E)=" + fixed(r.design.p_exposure, 4) +
         ", P(D=1|E=1)=" + fixed(r.design.p_disease_exposed, 4) +
         ", P(D=1|E=0)=" + fixed(r.design.p_disease_unexposed, 4) + "\n";
  out += "OR_true = " + fixed(r.or_true, 3) +
         "; theoretical power to reject OR_true = 1: " +
         fixed(r.theoretical_power, 3) + "\n";
  out += "Settings: mc=" + std::to_string(r.settings.mc_count) +
         ", pbs=" + std::to_string(r.settings.pbs_count) +
         ", alpha=" + fixed(r.settings.alpha, 4) +
         ", seed=" + std::to_string(r.settings.seed) + "\n\n";
  out +=
      "| Method / Mean point estimate "
      "| 1-P(OR_true in CI) (Mean LB, Mean UB) [Width] "
      "| P(miss: OR_true too high) | P(miss: OR_true too low) "
      "| MC Empirical Power |\n";
  out += "|---|---|---|---|---|\n";
  for (const MethodSummary& s : r.summaries) {
    out += "| " + std::string(method_label(s.method)) + " / " +
           fixed(s.mean_point, 3) + " | " + fixed(s.one_minus_coverage, 4) +
           " (" + fixed(s.mean_lower, 3) + ", " + fixed(s.mean_upper, 3) +
           ") [" + fixed(s.mean_width, 3) + "] | " + fixed(s.miss_high, 4) +
           " | " + fixed(s.miss_low, 4) + " | " +
           fixed(s.empirical_power, 4) + " |\n";
  }
  return out;
}

std::string render_csv(const SimulationReport& r) {
  std::string out =
      "method,mean_point,one_minus_coverage,miss_high,miss_low,mean_lower,"
      "mean_upper,mean_width,empirical_power\n";
  for (const MethodSummary& s : r.summaries) {
    out += std::string(method_name(s.method)) + "," + full(s.mean_point) +
           "," + full(s.one_minus_coverage) + "," + full(s.miss_high) + "," +
           full(s.miss_low) + "," + full(s.mean_lower) + "," +
           full(s.mean_upper) + "," + full(s.mean_width) + "," +
           full(s.empirical_power) + "\n";
  }
  return out;
}

std::string render_structured(const SimulationReport& r) {
  json doc{{"design",
            {{"n", r.design.n},
             {"p_exposure", r.design.p_exposure},
             {"p_disease_exposed", r.design.p_disease_exposed},
             {"p_disease_unexposed", r.design.p_disease_unexposed}}},
           {"settings", settings_to_json(r.settings)},
           {"or_true", r.or_true},
           {"theoretical_power", r.theoretical_power},
           {"summaries", json::array()}};
  for (const MethodSummary& s : r.summaries) {
    doc["summaries"].push_back(summary_to_json(s));
  }
  return doc.dump(2) + "\n";
}

SimulationReport parse_structured(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("structured report: ") + e.what());
  }
  SimulationReport r;
  const json& design = doc.at("design");
  r.design.n = design.at("n").get<std::int64_t>();
  r.design.p_exposure = design.at("p_exposure").get<double>();
  r.design.p_disease_exposed = design.at("p_disease_exposed").get<double>();
  r.design.p_disease_unexposed =
      design.at("p_disease_unexposed").get<double>();
  const json& settings = doc.at("settings");
  r.settings.mc_count = settings.at("mc_count").get<std::uint64_t>();
  r.settings.pbs_count = settings.at("pbs_count").get<std::uint32_t>();
  r.settings.alpha = settings.at("alpha").get<double>();
  r.settings.seed = settings.at("seed").get<std::uint64_t>();
  MethodSet methods;
  for (const json& name : settings.at("methods")) {
    methods.insert(method_from_json(name));
  }
  r.settings.methods = methods;
  r.or_true = doc.at("or_true").get<double>();
  r.theoretical_power = doc.at("theoretical_power").get<double>();
  for (const json& s : doc.at("summaries")) {
    MethodSummary summary;
    summary.method = method_from_json(s.at("method"));
    summary.mean_point = s.at("mean_point").get<double>();
    summary.one_minus_coverage = s.at("one_minus_coverage").get<double>();
    summary.miss_high = s.at("miss_high").get<double>();
    summary.miss_low = s.at("miss_low").get<double>();
    summary.mean_lower = s.at("mean_lower").get<double>();
    summary.mean_upper = s.at("mean_upper").get<double>();
    summary.mean_width = s.at("mean_width").get<double>();
    summary.empirical_power = s.at("empirical_power").get<double>();
    summary.replication_count = s.at("replication_count").get<std::uint64_t>();
    r.summaries.push_back(summary);
  }
  return r;
}

std::string render_estimates_markdown(const ContingencyTable& t,
                                      const std::vector<EstimateWithCI>& es) {
  std::string out;
  out += "# Odds-ratio estimates\n\n";
  out += "Table: a=" + full(t.a()) + ", b=" + full(t.b()) +
         ", c=" + full(t.c()) + ", d=" + full(t.d()) +
         " (n=" + full(t.n()) + ")\n\n";
  out += "| Method | Point | Lower | Upper | alpha |\n";
  out += "|---|---|---|---|---|\n";
  for (const EstimateWithCI& e : es) {
    out += "| " + std::string(method_label(e.method)) + " | " +
           fixed(e.point, 3) + " | " + fixed(e.lower, 3) + " | " +
           fixed(e.upper, 3) + " | " + fixed(e.alpha, 4) + " |\n";
  }
  return out;
}

std::string render_estimates_csv(const std::vector<EstimateWithCI>& es) {
  std::string out = "method,point,lower,upper,alpha,mu_used,sigma_used\n";
  for (const EstimateWithCI& e : es) {
    out += std::string(method_name(e.method)) + "," + full(e.point) + "," +
           full(e.lower) + "," + full(e.upper) + "," + full(e.alpha) + "," +
           full(e.mu_used) + "," + full(e.sigma_used) + "\n";
  }
  return out;
}

std::string render_estimates_structured(
    const ContingencyTable& t, const std::vector<EstimateWithCI>& es) {
  json doc{{"table",
            {{"a", t.a()}, {"b", t.b()}, {"c", t.c()}, {"d", t.d()}}},
           {"estimates", json::array()}};
  for (const EstimateWithCI& e : es) {
    doc["estimates"].push_back(json{{"method", method_name(e.method)},
                                    {"point", e.point},
                                    {"lower", e.lower},
                                    {"upper", e.upper},
                                    {"alpha", e.alpha},
                                    {"mu_used", e.mu_used},
                                    {"sigma_used", e.sigma_used}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace oddsratio
