#pragma once

#include <cstddef>
#include <vector>

#include "oddsratio/estimators.hpp"
#include "oddsratio/random.hpp"
#include "oddsratio/table.hpp"

namespace oddsratio {

/// An ordered parametric bootstrap sample on the odds-ratio scale.
/// Invariant: at least two entries, sorted ascending, all positive.
class BootstrapSample {
 public:
  /// Takes ownership of the draws and sorts them.
  explicit BootstrapSample(std::vector<double> draws);

  const std::vector<double>& draws() const { return draws_; }
  std::size_t size() const { return draws_.size(); }

 private:
  std::vector<double> draws_;
};

/// Draws `count` independent lognormal realizations exp(mu + sigma * Z)
/// from the stream, one uniform per draw, via the inverse-CDF transform.
BootstrapSample sample_lognormal(double mu, double sigma, std::size_t count,
                                 RandomStream& stream);

/// Quantile by linear interpolation between order statistics at rank
/// h = (count - 1) * p (zero-based). Throws InvalidProbability outside
/// (0, 1).
double empirical_quantile(const BootstrapSample& sample, double p);

/// Method II. Draws `pbs` realizations of OR* from LN(ln(OR_crude) -
/// sigma^2/2, sigma); the point estimate is the sample median and the
/// bounds are the alpha/2 and 1-alpha/2 empirical quantiles.
EstimateWithCI percentile_bootstrap_estimate(const ContingencyTable& t,
                                             double alpha, std::size_t pbs,
                                             RandomStream& stream);

}  // namespace oddsratio
