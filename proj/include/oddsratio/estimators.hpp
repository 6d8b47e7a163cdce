#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "oddsratio/table.hpp"

namespace oddsratio {

/// The four point/interval estimation methods under study.
enum class Method {
  standard,    ///< (I)   crude OR with the lognormal Wald interval
  pctl_boot,   ///< (II)  parametric bootstrap percentile interval
  pctl_calc,   ///< (III) calculated percentile interval around OR*
  barendregt,  ///< (IV)  lognormal moment-matched recalculation
};

inline constexpr std::array<Method, 4> kAllMethods = {
    Method::standard, Method::pctl_boot, Method::pctl_calc,
    Method::barendregt};

/// Stable flag-style name: "standard", "pctl-boot", "pctl-calc",
/// "barendregt".
std::string_view method_name(Method m);

/// Report row label: "Standard (I)", "Pctl Boot. (II)", ...
std::string_view method_label(Method m);

std::optional<Method> method_from_name(std::string_view name);

/// A point estimate with its two-sided confidence interval, plus the
/// log-scale (mu, sigma) parametrization the method centered on, so the
/// estimate can be reconstructed or resampled without the table.
struct EstimateWithCI {
  Method method;
  double point;
  double lower;
  double upper;
  double alpha;
  double mu_used;
  double sigma_used;

  bool operator==(const EstimateWithCI&) const = default;
};

/// Method I. point = crude OR; bounds = exp(ln(OR) -/+ z_{1-a/2} * sigma).
EstimateWithCI standard_estimate(const ContingencyTable& t, double alpha);

/// Bias-adjusted point estimate OR* = OR_crude * exp(-sigma^2 / 2): the
/// median-vs-mean gap of the lognormal sampling model, removed.
double or_star(const ContingencyTable& t);

/// Method III. point = OR*; bounds = standard bounds shifted by the same
/// multiplicative factor exp(-sigma^2 / 2).
EstimateWithCI percentile_calc_estimate(const ContingencyTable& t,
                                        double alpha);

/// Reparametrized sigma^2 for method IV, as a function of sigma^2 alone:
/// ln(1 + (e^{s} - 1) e^{s}). Exposed so tests can pit it against a
/// numeric root-finding oracle.
double barendregt_sigma_sq(double sigma_sq);

/// Method IV. Refits the lognormal so that its natural-scale mean equals
/// OR_crude and its natural-scale variance matches the variance implied by
/// the original LN(ln OR_crude, sigma) fit; with mu = ln(OR_crude) -
/// sigma*^2/2 the variance condition has the closed form implemented by
/// barendregt_sigma_sq. point = exp(mu**); bounds = exp(mu** -/+ z sigma*).
EstimateWithCI barendregt_estimate(const ContingencyTable& t, double alpha);

}  // namespace oddsratio
