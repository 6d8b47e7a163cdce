#pragma once

#include <cstdint>

#include "oddsratio/estimators.hpp"
#include "oddsratio/study.hpp"

namespace oddsratio {

/// Streaming per-method accumulator: integer event counts plus running
/// sums, constant memory in the replication count. Mergeable, so any
/// partition of replications across workers reduces to the same totals.
struct MethodAccumulator {
  std::uint64_t count = 0;
  std::uint64_t miss_high = 0;    ///< upper bound fell below OR_true
  std::uint64_t miss_low = 0;     ///< lower bound fell above OR_true
  std::uint64_t reject_null = 0;  ///< CI excluded 1
  double sum_point = 0.0;
  double sum_lower = 0.0;
  double sum_upper = 0.0;

  void record(const EstimateWithCI& e, double or_true);
  void merge(const MethodAccumulator& other);
};

/// Aggregate evaluation of one method over a replication set.
struct MethodSummary {
  Method method = Method::standard;
  double mean_point = 0.0;
  double one_minus_coverage = 0.0;
  double miss_high = 0.0;
  double miss_low = 0.0;
  double mean_lower = 0.0;
  double mean_upper = 0.0;
  double mean_width = 0.0;
  double empirical_power = 0.0;
  std::uint64_t replication_count = 0;

  bool operator==(const MethodSummary&) const = default;
};

/// Proportions come from the exact integer counts; mean_width is
/// mean_upper - mean_lower. Throws EmptyAccumulator when count == 0.
MethodSummary finalize(Method method, const MethodAccumulator& acc);

/// Two-sided power of the CI-based test of OR_true = 1 at level alpha:
/// Phi(|ln OR_true| / sqrt(1/(nE1 p1 q1) + 1/(nE0 p0 q0)) - z_{1-a/2}),
/// with expected group sizes nE1 = n P(E), nE0 = n (1 - P(E)).
double theoretical_power(const StudyDesign& d, double alpha);

}  // namespace oddsratio
