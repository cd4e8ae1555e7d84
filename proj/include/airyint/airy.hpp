#pragma once

#include "airyint/rational.hpp"

namespace airyint {

/// Largest |x| accepted by eval_airy_basis. Bi(50) is about 2.6e101; beyond
/// this the growth is reported as an error instead of drifting to infinity.
inline constexpr double kAiryDomainLimit = 50.0;

/// |x| at which evaluation switches from the Maclaurin series to the
/// asymptotic expansions.
inline constexpr double kAirySeriesLimit = 8.0;

struct BasisValues {
  double ai;
  double ai_prime;
  double bi;
  double bi_prime;
};

/// Ai, Ai', Bi, Bi' at x.
///
/// Accuracy: relative error below 1e-12 for |x| <= 8, where the Maclaurin
/// series is summed in binary128 so the Ai cancellation on the positive axis
/// is harmless. For 8 < |x| <= 50 the asymptotic expansions, truncated at
/// their smallest term, give relative error below 1e-10. On the oscillatory
/// negative axis "relative" is measured against the modulus sqrt(Ai^2 + Bi^2).
///
/// Throws Error(NonFinite) for NaN/inf and Error(OverflowDomain) for |x| > 50.
BasisValues eval_airy_basis(double x);

/// y(x) = c1*Ai(x + shift) + c2*Bi(x + shift), a solution of
/// y'' = (x + shift) * y. The shift is the eigenvalue and stays exact because
/// the symbolic side depends on it.
class SolutionSpec {
 public:
  /// Throws Error(InvalidArgument) when c1 = c2 = 0 or either is non-finite.
  SolutionSpec(double c1, double c2, Rational shift = 0);

  static SolutionSpec ai(Rational shift = 0) { return {1.0, 0.0, std::move(shift)}; }
  static SolutionSpec bi(Rational shift = 0) { return {0.0, 1.0, std::move(shift)}; }

  double c1() const { return c1_; }
  double c2() const { return c2_; }
  const Rational& shift() const { return shift_; }
  bool pure_ai() const { return c2_ == 0.0; }

 private:
  double c1_;
  double c2_;
  Rational shift_;
};

struct SolutionValue {
  double y;
  double y_prime;
};

SolutionValue eval_solution(const SolutionSpec& spec, double x);

/// y1*y2' - y1'*y2 at x. Only defined for equal shifts, where it is constant.
/// Throws Error(ShiftMismatch) otherwise.
double wronskian_numeric(const SolutionSpec& spec1, const SolutionSpec& spec2, double x);

}  // namespace airyint
