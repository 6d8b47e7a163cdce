#include "oddsratio/table.hpp"

#include <cmath>
#include <string>

#include "oddsratio/errors.hpp"

namespace oddsratio {

namespace {

void check_cell(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw InvalidCell(std::string("cell ") + name +
                      " must be a nonnegative finite real");
  }
}

void check_positive_cells(const ContingencyTable& t, const char* op) {
  if (t.a() == 0.0 || t.b() == 0.0 || t.c() == 0.0 || t.d() == 0.0) {
    throw DegenerateTable(std::string(op) +
                          ": table has a zero cell; apply a continuity "
                          "correction first");
  }
}

}  // namespace

ContingencyTable::ContingencyTable(double a, double b, double c, double d)
    : a_(a), b_(b), c_(c), d_(d) {
  check_cell(a, "a");
  check_cell(b, "b");
  check_cell(c, "c");
  check_cell(d, "d");
}

ContingencyTable apply_continuity(const ContingencyTable& t, double delta) {
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw InvalidCell("apply_continuity: delta must be nonnegative");
  }
  if (delta == 0.0) {
    return t;
  }
  return {t.a() + delta, t.b() + delta, t.c() + delta, t.d() + delta};
}

double crude_or(const ContingencyTable& t) {
  check_positive_cells(t, "crude_or");
  return (t.a() * t.d()) / (t.b() * t.c());
}

double sigma_hat(const ContingencyTable& t) {
  check_positive_cells(t, "sigma_hat");
  return std::sqrt(1.0 / t.a() + 1.0 / t.b() + 1.0 / t.c() + 1.0 / t.d());
}

}  // namespace oddsratio
