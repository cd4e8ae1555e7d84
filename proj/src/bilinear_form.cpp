#include "airyint/bilinear_form.hpp"

#include <cmath>
#include <utility>

#include "airyint/errors.hpp"
#include "airy_wide.hpp"

namespace airyint {

const char* to_string(Pattern pattern) {
  switch (pattern) {
    case Pattern::AB: return "AB";
    case Pattern::ABp: return "ABp";
    case Pattern::ApB: return "ApB";
    case Pattern::ApBp: return "ApBp";
  }
  return "?";
}

Pattern parse_pattern(const std::string& name) {
  for (Pattern p : kAllPatterns) {
    if (name == to_string(p)) return p;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown pattern '" + name + "' (expected AB, ABp, ApB or ApBp)");
}

BilinearForm BilinearForm::single(Pattern pattern, Polynomial p, Rational a, Rational b) {
  BilinearForm f(std::move(a), std::move(b));
  f[pattern] = std::move(p);
  return f;
}

Polynomial& BilinearForm::operator[](Pattern pattern) {
  switch (pattern) {
    case Pattern::AB: return p_ab;
    case Pattern::ABp: return p_abp;
    case Pattern::ApB: return p_apb;
    case Pattern::ApBp: break;
  }
  return p_apbp;
}

const Polynomial& BilinearForm::operator[](Pattern pattern) const {
  return const_cast<BilinearForm&>(*this)[pattern];
}

bool BilinearForm::is_zero() const {
  return p_ab.is_zero() && p_abp.is_zero() && p_apb.is_zero() && p_apbp.is_zero();
}

namespace {

void require_same_shifts(const BilinearForm& f, const BilinearForm& g) {
  if (f.shift_a != g.shift_a || f.shift_b != g.shift_b) {
    throw Error(ErrorKind::ShiftMismatch, "bilinear forms carry different shifts");
  }
}

}  // namespace

BilinearForm& BilinearForm::operator+=(const BilinearForm& other) {
  require_same_shifts(*this, other);
  for (Pattern p : kAllPatterns) (*this)[p] += other[p];
  return *this;
}

BilinearForm& BilinearForm::operator-=(const BilinearForm& other) {
  require_same_shifts(*this, other);
  for (Pattern p : kAllPatterns) (*this)[p] -= other[p];
  return *this;
}

BilinearForm& BilinearForm::operator*=(const Rational& c) {
  for (Pattern p : kAllPatterns) (*this)[p] *= c;
  return *this;
}

BilinearForm& BilinearForm::operator*=(const Polynomial& q) {
  for (Pattern p : kAllPatterns) (*this)[p] = (*this)[p] * q;
  return *this;
}

BilinearForm form_differentiate(const BilinearForm& form) {
  const Polynomial xa = Polynomial::linear_shift(form.shift_a);
  const Polynomial xb = Polynomial::linear_shift(form.shift_b);
  BilinearForm d(form.shift_a, form.shift_b);

  // (P AB)'   = P' AB   + P AB'  + P A'B
  d.p_ab += differentiate(form.p_ab);
  d.p_abp += form.p_ab;
  d.p_apb += form.p_ab;
  // (P AB')'  = P' AB'  + P A'B' + P (x+b) AB
  d.p_abp += differentiate(form.p_abp);
  d.p_apbp += form.p_abp;
  d.p_ab += form.p_abp * xb;
  // (P A'B)'  = P' A'B  + P A'B' + P (x+a) AB
  d.p_apb += differentiate(form.p_apb);
  d.p_apbp += form.p_apb;
  d.p_ab += form.p_apb * xa;
  // (P A'B')' = P' A'B' + P (x+a) AB' + P (x+b) A'B
  d.p_apbp += differentiate(form.p_apbp);
  d.p_abp += form.p_apbp * xa;
  d.p_apb += form.p_apbp * xb;
  return d;
}

BilinearForm form_swap(const BilinearForm& form) {
  BilinearForm s(form.shift_b, form.shift_a);
  s.p_ab = form.p_ab;
  s.p_abp = form.p_apb;
  s.p_apb = form.p_abp;
  s.p_apbp = form.p_apbp;
  return s;
}

BilinearForm wronskian_form(const Polynomial& h, WronskianOrientation orientation,
                            const Rational& shift_a, const Rational& shift_b) {
  BilinearForm w(shift_a, shift_b);
  if (orientation == WronskianOrientation::AgainstB) {
    // A (hB)' - A' (hB) = h' AB + h AB' - h A'B
    w.p_ab = differentiate(h);
    w.p_abp = h;
    w.p_apb = -h;
  } else {
    // A (hB')' - A' (hB') = h (x+b) AB + h' AB' - h A'B'
    w.p_ab = h * Polynomial::linear_shift(shift_b);
    w.p_abp = differentiate(h);
    w.p_apbp = -h;
  }
  return w;
}

namespace {

using detail::wide;

wide eval_wide(const Polynomial& p, wide x) {
  wide acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + detail::to_wide(*it);
  return acc;
}

struct WideSolution {
  wide y;
  wide y_prime;
};

WideSolution eval_solution_wide(const SolutionSpec& spec, double x) {
  const detail::WideBasis v = detail::eval_airy_basis_wide(wide(x) + detail::to_wide(spec.shift()));
  const wide c1 = spec.c1(), c2 = spec.c2();
  return {c1 * v.ai + c2 * v.bi, c1 * v.ai_prime + c2 * v.bi_prime};
}

}  // namespace

namespace {

void check_form_inputs(const BilinearForm& form, const SolutionSpec& spec_a, const SolutionSpec& spec_b) {
  if (spec_a.shift() != form.shift_a || spec_b.shift() != form.shift_b) {
    throw Error(ErrorKind::ShiftMismatch, "solution shifts do not match the form's shifts (" +
                                              to_string(form.shift_a) + ", " + to_string(form.shift_b) + ")");
  }
}

wide form_eval_wide(const BilinearForm& form, const SolutionSpec& spec_a, const SolutionSpec& spec_b, double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::NonFinite, "evaluation point is not finite");
  if (form.is_zero()) return 0;
  const WideSolution a = eval_solution_wide(spec_a, x);
  const WideSolution b = eval_solution_wide(spec_b, x);
  const wide xw = x;
  return eval_wide(form.p_ab, xw) * a.y * b.y + eval_wide(form.p_abp, xw) * a.y * b.y_prime +
         eval_wide(form.p_apb, xw) * a.y_prime * b.y + eval_wide(form.p_apbp, xw) * a.y_prime * b.y_prime;
}

}  // namespace

double form_eval(const BilinearForm& form, const SolutionSpec& spec_a, const SolutionSpec& spec_b,
                 double x) {
  check_form_inputs(form, spec_a, spec_b);
  return static_cast<double>(form_eval_wide(form, spec_a, spec_b, x));
}

// Endpoint values of a distinct-shift antiderivative can exceed the definite value by many
// orders of magnitude, so the difference is taken before rounding.
double form_eval_between(const BilinearForm& form, const SolutionSpec& spec_a, const SolutionSpec& spec_b,
                         double lo, double hi) {
  check_form_inputs(form, spec_a, spec_b);
  const wide upper = form_eval_wide(form, spec_a, spec_b, hi);
  return static_cast<double>(upper - form_eval_wide(form, spec_a, spec_b, lo));
}

std::string to_string(const BilinearForm& form) {
  static constexpr std::array<const char*, 4> kLabels = {"A*B  ", "A*B' ", "A'*B ", "A'*B'"};
  std::string out = "shifts: a = " + to_string(form.shift_a) + ", b = " + to_string(form.shift_b) + "\n";
  for (std::size_t i = 0; i < kAllPatterns.size(); ++i) {
    const Polynomial& p = form[kAllPatterns[i]];
    if (p.is_zero()) continue;
    out += std::string(kLabels[i]) + " : " + to_string(p) + "\n";
  }
  if (form.is_zero()) out += "0\n";
  return out;
}

}  // namespace airyint
