#pragma once

namespace oddsratio {

/// Standard normal CDF. Absolute error below 1e-9 over the full range.
double normal_cdf(double x);

/// Inverse of the standard normal CDF (Wichura's AS 241, PPND16 variant).
/// Absolute error below 1e-9 on (0, 1). Throws InvalidProbability for
/// p outside the open unit interval.
double normal_quantile(double p);

}  // namespace oddsratio
