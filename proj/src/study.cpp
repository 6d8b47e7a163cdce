#include "oddsratio/study.hpp"

#include "oddsratio/errors.hpp"

namespace oddsratio {

void validate_design(const StudyDesign& d) {
  if (d.n < 4) {
    throw InvalidDesign("design: n must be at least 4");
  }
  for (double p : {d.p_exposure, d.p_disease_exposed, d.p_disease_unexposed}) {
    if (!(p > 0.0 && p < 1.0)) {
      throw InvalidDesign(
          "design: probabilities must lie strictly inside (0, 1)");
    }
  }
}

CellProbabilities cell_probabilities(const StudyDesign& d) {
  const double pe = d.p_exposure;
  const double p1 = d.p_disease_exposed;
  const double p0 = d.p_disease_unexposed;
  return {(1.0 - p0) * (1.0 - pe), p0 * (1.0 - pe), (1.0 - p1) * pe, p1 * pe};
}

double true_or(const StudyDesign& d) {
  const double p1 = d.p_disease_exposed;
  const double p0 = d.p_disease_unexposed;
  return (p1 / (1.0 - p1)) / (p0 / (1.0 - p0));
}

ContingencyTable generate_table(const StudyDesign& d, RandomStream& stream) {
  std::int64_t cells[4] = {0, 0, 0, 0};  // a, b, c, d
  for (std::int64_t i = 0; i < d.n; ++i) {
    const bool exposed = stream.next_uniform() < d.p_exposure;
    const double p_disease =
        exposed ? d.p_disease_exposed : d.p_disease_unexposed;
    const bool diseased = stream.next_uniform() < p_disease;
    ++cells[(exposed ? 2 : 0) + (diseased ? 1 : 0)];
  }
  return {static_cast<double>(cells[0]), static_cast<double>(cells[1]),
          static_cast<double>(cells[2]), static_cast<double>(cells[3])};
}

}  // namespace oddsratio
