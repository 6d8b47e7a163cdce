#pragma once

#include <string>
#include <vector>

#include "oddsratio/simulation.hpp"

namespace oddsratio {

enum class OutputFormat { markdown, csv, structured };

std::string_view format_name(OutputFormat f);
std::optional<OutputFormat> format_from_name(std::string_view name);

/// Header block (design, OR_true, theoretical power, settings) followed by
/// a five-column table: method/point, 1-coverage with mean bounds and
/// width, miss-high, miss-low, empirical power. Points and bounds show 3
/// decimals, proportions 4.
std::string render_markdown(const SimulationReport& report);

/// One row per method under the fixed header
/// method,mean_point,one_minus_coverage,miss_high,miss_low,mean_lower,
/// mean_upper,mean_width,empirical_power. Values carry 17 significant
/// digits.
std::string render_csv(const SimulationReport& report);

/// Full-precision JSON document, including the seed. Round-trips through
/// parse_structured to a numerically identical report.
std::string render_structured(const SimulationReport& report);

/// Inverse of render_structured. Throws std::invalid_argument on malformed
/// input.
SimulationReport parse_structured(const std::string& text);

/// Estimate-mode renderings for a single table.
std::string render_estimates_markdown(const ContingencyTable& t,
                                      const std::vector<EstimateWithCI>& es);
std::string render_estimates_csv(const std::vector<EstimateWithCI>& es);
std::string render_estimates_structured(const ContingencyTable& t,
                                        const std::vector<EstimateWithCI>& es);

}  // namespace oddsratio
