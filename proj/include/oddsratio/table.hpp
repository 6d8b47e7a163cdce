#pragma once

namespace oddsratio {

/// A 2x2 exposure-by-disease table with real-valued cells:
///
///        D=0  D=1
///   E=0   a    b
///   E=1   c    d
///
/// Cells are reals rather than integers so continuity-corrected and
/// expected-value tables flow through the same type. Immutable after
/// construction; all cells are nonnegative and finite.
class ContingencyTable {
 public:
  /// Throws InvalidCell if any cell is negative or non-finite.
  ContingencyTable(double a, double b, double c, double d);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  /// Total count a + b + c + d.
  double n() const { return a_ + b_ + c_ + d_; }

  bool operator==(const ContingencyTable&) const = default;

 private:
  double a_, b_, c_, d_;
};

/// Returns a copy of `t` with `delta` added to every cell. Throws
/// InvalidCell for negative delta. apply_continuity(t, 0) == t exactly.
ContingencyTable apply_continuity(const ContingencyTable& t,
                                  double delta = 0.5);

/// Cross-product odds ratio (a*d)/(b*c). Throws DegenerateTable if any
/// cell is zero; continuity-correct first.
double crude_or(const ContingencyTable& t);

/// Delta-method standard deviation of ln(OR):
/// sqrt(1/a + 1/b + 1/c + 1/d). Throws DegenerateTable if any cell is zero.
double sigma_hat(const ContingencyTable& t);

}  // namespace oddsratio
