#include "oddsratio/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oddsratio/errors.hpp"
#include "oddsratio/normal.hpp"

namespace oddsratio {

BootstrapSample::BootstrapSample(std::vector<double> draws)
    : draws_(std::move(draws)) {
  if (draws_.size() < 2) {
    throw std::invalid_argument("bootstrap sample needs at least two draws");
  }
  std::sort(draws_.begin(), draws_.end());
  if (!(draws_.front() > 0.0)) {
    throw std::invalid_argument("bootstrap draws must be positive");
  }
}

BootstrapSample sample_lognormal(double mu, double sigma, std::size_t count,
                                 RandomStream& stream) {
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("sample_lognormal: sigma must be positive");
  }
  if (count < 2) {
    throw std::invalid_argument("sample_lognormal: count must be >= 2");
  }
  std::vector<double> draws(count);
  for (double& value : draws) {
    double u = stream.next_uniform();
    if (u <= 0.0) {
      u = 0x1.0p-54;  // measure-zero guard: keep the quantile finite
    }
    value = std::exp(mu + sigma * normal_quantile(u));
  }
  return BootstrapSample(std::move(draws));
}

double empirical_quantile(const BootstrapSample& sample, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw InvalidProbability("empirical_quantile: p must lie in (0, 1)");
  }
  const auto& v = sample.draws();
  const double h = static_cast<double>(v.size() - 1) * p;
  auto idx = static_cast<std::size_t>(h);
  if (idx > v.size() - 2) {
    idx = v.size() - 2;
  }
  const double frac = h - static_cast<double>(idx);
  return v[idx] + frac * (v[idx + 1] - v[idx]);
}

EstimateWithCI percentile_bootstrap_estimate(const ContingencyTable& t,
                                             double alpha, std::size_t pbs,
                                             RandomStream& stream) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidProbability("alpha must lie in (0, 1)");
  }
  const double sigma = sigma_hat(t);
  const double mu_star = std::log(crude_or(t)) - sigma * sigma / 2.0;
  const BootstrapSample sample = sample_lognormal(mu_star, sigma, pbs, stream);
  return {Method::pctl_boot,
          empirical_quantile(sample, 0.5),
          empirical_quantile(sample, alpha / 2.0),
          empirical_quantile(sample, 1.0 - alpha / 2.0),
          alpha,
          mu_star,
          sigma};
}

}  // namespace oddsratio
