#pragma once

#include <array>
#include <string>

#include "airyint/airy.hpp"
#include "airyint/polynomial.hpp"
#include "airyint/rational.hpp"

namespace airyint {

/// Which product of A, B and their first derivatives a term carries.
enum class Pattern { AB, ABp, ApB, ApBp };

inline constexpr std::array<Pattern, 4> kAllPatterns = {Pattern::AB, Pattern::ABp, Pattern::ApB,
                                                        Pattern::ApBp};

/// "AB", "ABp", "ApB", "ApBp".
const char* to_string(Pattern pattern);
/// Inverse of to_string(Pattern). Throws Error(InvalidArgument).
Pattern parse_pattern(const std::string& name);

/// P1*A*B + P2*A*B' + P3*A'*B + P4*A'*B' where A'' = (x + a)A and
/// B'' = (x + b)B. Closed under d/dx; every antiderivative produced by the
/// reduction module lives here.
///
/// Equality is syntactic on the canonical polynomials and the exact shifts.
struct BilinearForm {
  Polynomial p_ab;
  Polynomial p_abp;
  Polynomial p_apb;
  Polynomial p_apbp;
  Rational shift_a;
  Rational shift_b;

  BilinearForm() = default;
  BilinearForm(Rational a, Rational b) : shift_a(std::move(a)), shift_b(std::move(b)) {}

  /// The form with `p` in the slot named by `pattern` and zeros elsewhere.
  static BilinearForm single(Pattern pattern, Polynomial p, Rational a, Rational b);

  Polynomial& operator[](Pattern pattern);
  const Polynomial& operator[](Pattern pattern) const;

  bool is_zero() const;

  /// Throws Error(ShiftMismatch) when the shifts differ.
  BilinearForm& operator+=(const BilinearForm& other);
  BilinearForm& operator-=(const BilinearForm& other);
  BilinearForm& operator*=(const Rational& c);
  /// Multiplies every coefficient polynomial by `p`.
  BilinearForm& operator*=(const Polynomial& p);

  friend BilinearForm operator+(BilinearForm f, const BilinearForm& g) { return f += g; }
  friend BilinearForm operator-(BilinearForm f, const BilinearForm& g) { return f -= g; }
  friend BilinearForm operator*(const Rational& c, BilinearForm f) { return f *= c; }
  friend BilinearForm operator*(BilinearForm f, const Rational& c) { return f *= c; }

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;
};

/// Exact derivative, reducing A'' and B'' through the Airy equation.
BilinearForm form_differentiate(const BilinearForm& form);

/// Exchanges the roles of A and B.
BilinearForm form_swap(const BilinearForm& form);

enum class WronskianOrientation { AgainstB, AgainstBPrime };

/// W(A, h*B) or W(A, h*B') as an exact form, with W(u, v) = u v' - u' v.
BilinearForm wronskian_form(const Polynomial& h, WronskianOrientation orientation,
                            const Rational& shift_a, const Rational& shift_b);

/// Numeric value of the form with A, B given by the two solutions. Requires
/// spec_a.shift() == form.shift_a and spec_b.shift() == form.shift_b exactly;
/// throws Error(ShiftMismatch) otherwise.
double form_eval(const BilinearForm& form, const SolutionSpec& spec_a, const SolutionSpec& spec_b,
                 double x);

/// G(hi) - G(lo), accumulated without rounding the individual endpoint values.
double form_eval_between(const BilinearForm& form, const SolutionSpec& spec_a, const SolutionSpec& spec_b,
                         double lo, double hi);

/// Multi-line text such as "A*B     : x\nA'*B'   : -1".
std::string to_string(const BilinearForm& form);

}  // namespace airyint
