#include "oddsratio/metrics.hpp"

#include <cmath>

#include "oddsratio/errors.hpp"
#include "oddsratio/normal.hpp"

namespace oddsratio {

void MethodAccumulator::record(const EstimateWithCI& e, double or_true) {
  ++count;
  if (e.upper < or_true) {
    ++miss_high;
  }
  if (e.lower > or_true) {
    ++miss_low;
  }
  if (e.lower > 1.0 || e.upper < 1.0) {
    ++reject_null;
  }
  sum_point += e.point;
  sum_lower += e.lower;
  sum_upper += e.upper;
}

void MethodAccumulator::merge(const MethodAccumulator& other) {
  count += other.count;
  miss_high += other.miss_high;
  miss_low += other.miss_low;
  reject_null += other.reject_null;
  sum_point += other.sum_point;
  sum_lower += other.sum_lower;
  sum_upper += other.sum_upper;
}

MethodSummary finalize(Method method, const MethodAccumulator& acc) {
  if (acc.count == 0) {
    throw EmptyAccumulator("finalize: no replications recorded");
  }
  const auto n = static_cast<double>(acc.count);
  MethodSummary s;
  s.method = method;
  s.mean_point = acc.sum_point / n;
  s.miss_high = static_cast<double>(acc.miss_high) / n;
  s.miss_low = static_cast<double>(acc.miss_low) / n;
  s.one_minus_coverage =
      static_cast<double>(acc.miss_high + acc.miss_low) / n;
  s.mean_lower = acc.sum_lower / n;
  s.mean_upper = acc.sum_upper / n;
  s.mean_width = s.mean_upper - s.mean_lower;
  s.empirical_power = static_cast<double>(acc.reject_null) / n;
  s.replication_count = acc.count;
  return s;
}

double theoretical_power(const StudyDesign& d, double alpha) {
  const double n_exposed = static_cast<double>(d.n) * d.p_exposure;
  const double n_unexposed = static_cast<double>(d.n) * (1.0 - d.p_exposure);
  const double p1 = d.p_disease_exposed;
  const double p0 = d.p_disease_unexposed;
  const double log_or_variance = 1.0 / (n_exposed * p1 * (1.0 - p1)) +
                                 1.0 / (n_unexposed * p0 * (1.0 - p0));
  const double z = normal_quantile(1.0 - alpha / 2.0);
  const double shift = std::fabs(std::log(true_or(d)));
  return normal_cdf(shift / std::sqrt(log_or_variance) - z);
}

}  // namespace oddsratio
