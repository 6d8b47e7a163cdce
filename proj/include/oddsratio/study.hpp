#pragma once

#include <cstdint>

#include "oddsratio/random.hpp"
#include "oddsratio/table.hpp"

namespace oddsratio {

/// Generating parameters of a prospective study: n subjects, exposure
/// probability, and the two conditional disease probabilities.
struct StudyDesign {
  std::int64_t n = 0;
  double p_exposure = 0.5;
  double p_disease_exposed = 0.0;
  double p_disease_unexposed = 0.0;

  bool operator==(const StudyDesign&) const = default;
};

/// Throws InvalidDesign unless n >= 4 and all three probabilities lie
/// strictly inside (0, 1). generate_table itself tolerates boundary
/// probabilities; this gate is for simulation runs and user input.
void validate_design(const StudyDesign& d);

/// Joint cell probabilities of the 2x2 table implied by the design.
struct CellProbabilities {
  double a;  ///< P(D=0, E=0)
  double b;  ///< P(D=1, E=0)
  double c;  ///< P(D=0, E=1)
  double d;  ///< P(D=1, E=1)
};

CellProbabilities cell_probabilities(const StudyDesign& d);

/// The design's true odds ratio [p1/(1-p1)] / [p0/(1-p0)].
double true_or(const StudyDesign& d);

/// Samples one study: per subject, exposure ~ Bernoulli(p_exposure) then
/// disease ~ Bernoulli(P(D=1|E)), an event firing iff u < p with u drawn
/// from [0, 1). Consumes exactly 2n uniforms; cells sum to n.
ContingencyTable generate_table(const StudyDesign& d, RandomStream& stream);

}  // namespace oddsratio
