#pragma once

#include <variant>

#include "airyint/airy.hpp"
#include "airyint/bilinear_form.hpp"
#include "airyint/polynomial.hpp"
#include "airyint/rational.hpp"

namespace airyint {

// Closed-form antiderivatives of f(x) times a product of two Airy-equation
// solutions A (A'' = (x+a)A) and B (B'' = (x+b)B). Every result G satisfies
// form_differentiate(G) == f * pattern exactly; the constant of integration
// follows from the zero-constant antiderivatives used along the way.

struct ReductionRequest {
  Polynomial f;
  Pattern pattern = Pattern::AB;
  Rational shift_a;
  Rational shift_b;
};

/// Integral of x^n A B with a == b == shift.
BilinearForm antider_AB_equal(unsigned n, const Rational& shift);

/// Integral of x^n A B with a != b, by the commutator master identity.
/// Throws Error(EqualShifts) when a == b.
BilinearForm antider_AB_distinct(unsigned n, const Rational& shift_a, const Rational& shift_b);

/// Integral of x^n A B' (either shift regime).
BilinearForm antider_ABp(unsigned n, const Rational& shift_a, const Rational& shift_b);

/// Integral of x^n A' B, as form_swap(antider_ABp(n, b, a)).
BilinearForm antider_ApB(unsigned n, const Rational& shift_a, const Rational& shift_b);

/// Integral of x^n A' B'.
BilinearForm antider_ApBp(unsigned n, const Rational& shift_a, const Rational& shift_b);

/// Integral of f * pattern for a general polynomial f.
BilinearForm antider_poly(const ReductionRequest& request);

/// True iff form_differentiate(g) is exactly f in the slot named by `pattern`
/// (with g's shifts) and zero elsewhere.
bool differentiate_back_check(const BilinearForm& g, const Polynomial& f, Pattern pattern);

/// Hypervirial operators: multiplication by g(x), or f(x) d/dx.
struct MultiplyBy {
  Polynomial g;
};
struct PolyTimesD {
  Polynomial f;
};
using HvtOperator = std::variant<MultiplyBy, PolyTimesD>;

struct HvtResidual {
  double lhs = 0.0;  // integral of A [L, O] B
  double rhs = 0.0;  // (a - b) * integral of A O B + W(A, O B) at the endpoints
  double residual = 0.0;
};

/// Numerically checks, over [x1, x2],
///   integral A [L, O] B dx = (a - b) integral A O B dx + [W(A, O B)]_x1^x2
/// with L = D^2 - x. The shifts a, b come from the two solutions and the
/// commutators are expanded as [L, g] = g'' + 2 g' D and
/// [L, f D] = f'' D + 2 f' (L + x) + f. `tol` is the quadrature tolerance.
HvtResidual verify_hvt(const HvtOperator& op, const SolutionSpec& spec_a, const SolutionSpec& spec_b,
                       double x1, double x2, double tol);

}  // namespace airyint
