#pragma once

#include <cstddef>
#include <functional>

#include "airyint/airy.hpp"

namespace airyint {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

using Integrand = std::function<double(double)>;

inline constexpr std::size_t kDefaultEvaluationBudget = 1'000'000;

/// Globally adaptive Gauss-Kronrod (10/21-point) integration over [x1, x2].
///
/// The panel with the largest |K21 - G10| is bisected until the summed
/// estimate is at most max(tol, tol*|value|). Deterministic for fixed input.
///
/// Throws Error(InvalidArgument) for x1 > x2, non-finite limits or tol <= 0,
/// Error(NonFiniteIntegrand) when the integrand returns NaN/inf and
/// Error(NonConvergence) when `max_evaluations` would be exceeded.
QuadratureResult integrate_adaptive(const Integrand& integrand, double x1, double x2, double tol,
                                    std::size_t max_evaluations = kDefaultEvaluationBudget);

/// Point beyond which the tail of an integrand decaying like
/// Ai(x + s_a) * Ai(x + s_b) (times a polynomial) is below tol/2.
double improper_truncation_point(double x1, double tol, const SolutionSpec& witness_a,
                                 const SolutionSpec& witness_b);

/// Integral over [x1, +inf). Both witnesses must be pure Ai (c2 = 0), otherwise
/// the integrand is not known to decay and Error(DivergentIntegrand) is thrown.
/// Truncates at improper_truncation_point and integrates the rest with tol/2.
QuadratureResult integrate_improper(const Integrand& integrand, double x1, double tol,
                                    const SolutionSpec& witness_a, const SolutionSpec& witness_b);

}  // namespace airyint
