#include "oddsratio/estimators.hpp"

#include <cmath>

#include "oddsratio/errors.hpp"
#include "oddsratio/normal.hpp"

namespace oddsratio {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::standard:
      return "standard";
    case Method::pctl_boot:
      return "pctl-boot";
    case Method::pctl_calc:
      return "pctl-calc";
    case Method::barendregt:
      return "barendregt";
  }
  return "unknown";
}

std::string_view method_label(Method m) {
  switch (m) {
    case Method::standard:
      return "Standard (I)";
    case Method::pctl_boot:
      return "Pctl Boot. (II)";
    case Method::pctl_calc:
      return "Pctl Calc. (III)";
    case Method::barendregt:
      return "Barendregt (IV)";
  }
  return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) {
      return m;
    }
  }
  return std::nullopt;
}

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidProbability("alpha must lie in (0, 1)");
  }
}

}  // namespace

EstimateWithCI standard_estimate(const ContingencyTable& t, double alpha) {
  check_alpha(alpha);
  const double point = crude_or(t);
  const double sigma = sigma_hat(t);
  const double mu = std::log(point);
  const double z = normal_quantile(1.0 - alpha / 2.0);
  return {Method::standard,
          point,
          std::exp(mu - z * sigma),
          std::exp(mu + z * sigma),
          alpha,
          mu,
          sigma};
}

double or_star(const ContingencyTable& t) {
  const double sigma = sigma_hat(t);
  return crude_or(t) * std::exp(-sigma * sigma / 2.0);
}

EstimateWithCI percentile_calc_estimate(const ContingencyTable& t,
                                        double alpha) {
  check_alpha(alpha);
  const double point = or_star(t);
  const double sigma = sigma_hat(t);
  const double mu_star = std::log(crude_or(t)) - sigma * sigma / 2.0;
  const double z = normal_quantile(1.0 - alpha / 2.0);
  return {Method::pctl_calc,
          point,
          std::exp(mu_star - z * sigma),
          std::exp(mu_star + z * sigma),
          alpha,
          mu_star,
          sigma};
}

double barendregt_sigma_sq(double sigma_sq) {
  // Self-consistent variance match: with mu = ln(OR) - s*/2, the lognormal
  // variance (e^{s*} - 1) e^{2 mu + s*} reduces to (e^{s*} - 1) e^{2 ln OR},
  // so equating it to (e^{s} - 1) e^{2 ln OR + s} cancels the OR term.
  return std::log1p(std::expm1(sigma_sq) * std::exp(sigma_sq));
}

EstimateWithCI barendregt_estimate(const ContingencyTable& t, double alpha) {
  check_alpha(alpha);
  const double sigma = sigma_hat(t);
  const double mu = std::log(crude_or(t));
  const double sigma_sq_star = barendregt_sigma_sq(sigma * sigma);
  const double sigma_star = std::sqrt(sigma_sq_star);
  const double mu_final = mu - sigma_sq_star / 2.0;
  const double z = normal_quantile(1.0 - alpha / 2.0);
  return {Method::barendregt,
          std::exp(mu_final),
          std::exp(mu_final - z * sigma_star),
          std::exp(mu_final + z * sigma_star),
          alpha,
          mu_final,
          sigma_star};
}

}  // namespace oddsratio
