#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oddsratio/bootstrap.hpp"
#include "oddsratio/metrics.hpp"
#include "oddsratio/study.hpp"

namespace oddsratio {

/// A set of methods with a fixed canonical iteration order (the enum
/// order), so that requesting "barendregt,standard" and
/// "standard,barendregt" produce identical runs.
class MethodSet {
 public:
  static MethodSet all();

  MethodSet& insert(Method m);
  bool contains(Method m) const;
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;

  /// Enabled methods in canonical order.
  std::vector<Method> ordered() const;

  bool operator==(const MethodSet&) const = default;

 private:
  std::uint8_t bits_ = 0;
};

struct SimulationSettings {
  std::uint64_t mc_count = 200000;  ///< Monte Carlo replications
  std::uint32_t pbs_count = 1000;   ///< bootstrap draws per replication
  double alpha = 0.05;
  std::uint64_t seed = 0;
  MethodSet methods = MethodSet::all();

  bool operator==(const SimulationSettings&) const = default;
};

/// Throws InvalidSettings unless mc_count >= 1, pbs_count >= 2,
/// alpha in (0, 1) and at least one method is requested.
void validate_settings(const SimulationSettings& s);

/// Finished study: design and settings echo, exact analytics, and one
/// summary per requested method (in canonical order).
struct SimulationReport {
  StudyDesign design;
  SimulationSettings settings;
  double or_true = 0.0;
  double theoretical_power = 0.0;
  std::vector<MethodSummary> summaries;

  bool operator==(const SimulationReport&) const = default;
};

/// Optional per-replication capture. Rows are accumulated per scheduling
/// block and concatenated in replication order, so the CSV is identical
/// for any worker count.
class ReplicationLog {
 public:
  /// Header plus one row per (replication, method), in replication order.
  std::string csv() const;

  static constexpr std::string_view kHeader =
      "replication,method,point,lower,upper,miss_high,miss_low,reject_null";

 private:
  friend class SimulationRunner;
  std::vector<std::string> chunks_;
};

/// One replication of the study: generate a table from
/// RandomStream(seed, index), apply the +0.5 continuity correction, and
/// evaluate every requested method in canonical order (method II draws its
/// pbs_count bootstrap uniforms from the same stream, after the 2n table
/// uniforms). Returns estimates in canonical method order; if
/// uniforms_used is non-null it receives the stream draw count.
std::vector<EstimateWithCI> run_single_replication(
    const StudyDesign& design, const SimulationSettings& settings,
    std::uint64_t replication_index, std::uint64_t* uniforms_used = nullptr);

/// Runs the full Monte Carlo study. The report is a pure function of
/// (design, settings): replications are partitioned into fixed blocks and
/// block results are folded in index order, so thread_count (0 = all
/// hardware threads) never changes any output bit.
SimulationReport run_simulation(const StudyDesign& design,
                                const SimulationSettings& settings,
                                unsigned thread_count = 0,
                                ReplicationLog* log = nullptr);

}  // namespace oddsratio
