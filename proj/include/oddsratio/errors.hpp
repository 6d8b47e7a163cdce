#pragma once

#include <stdexcept>

namespace oddsratio {

/// A table cell is negative or non-finite.
struct InvalidCell : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A statistic was requested on a table with a zero cell; apply a
/// continuity correction first.
struct DegenerateTable : std::domain_error {
  using std::domain_error::domain_error;
};

/// A probability argument lies outside (0, 1).
struct InvalidProbability : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Study design parameters violate their domain (probabilities must be
/// strictly inside (0, 1), n >= 4).
struct InvalidDesign : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Simulation settings violate their domain.
struct InvalidSettings : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// finalize() was called on an accumulator with no recorded replications.
struct EmptyAccumulator : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace oddsratio
