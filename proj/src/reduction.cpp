#include "airyint/reduction.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "airyint/errors.hpp"
#include "airyint/quadrature.hpp"

namespace airyint {
namespace {

/// Memo tables for one top-level request. Each table is tied to one shift
/// pair (the equal table to the unshifted variable u = x + s).
class Reducer {
 public:
  Reducer(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool equal() const { return a_ == b_; }

  BilinearForm zero() const { return BilinearForm(a_, b_); }

  /// Integral of f A B.
  BilinearForm ab(const Polynomial& f) {
    BilinearForm out = zero();
    const auto& c = f.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (sgn(c[k]) == 0) continue;
      out += c[k] * (equal() ? ab_equal_monomial(k) : ab_distinct_monomial(k));
    }
    return out;
  }

  /// Integral of f A B'. With g = integral of f:
  ///   int g' A B' = (a-b)/2 int g A B - 1/2 int g'' A B + 1/2 W(A, g B)
  BilinearForm abp(const Polynomial& f) {
    if (f.is_zero()) return zero();
    const Polynomial g = antidifferentiate(f);
    BilinearForm out = Rational(1, 2) * wronskian_form(g, WronskianOrientation::AgainstB, a_, b_);
    out -= Rational(1, 2) * ab(differentiate(f));
    if (!equal()) out += Rational(a_ - b_) / 2 * ab(g);
    return out;
  }

  /// Integral of f A' B'. From (f A' B)' = f' A' B + f (x+a) A B + f A' B':
  ///   int f A' B' = f A' B - int f' A' B - int (x+a) f A B
  /// and int f' A' B is the A<->B mirror of an A B' integral.
  BilinearForm apbp(const Polynomial& f) {
    if (f.is_zero()) return zero();
    BilinearForm out = BilinearForm::single(Pattern::ApB, f, a_, b_);
    out -= apb(differentiate(f));
    out -= ab(f * Polynomial::linear_shift(a_));
    return out;
  }

  BilinearForm apb(const Polynomial& f) {
    if (f.is_zero()) return zero();
    Reducer mirrored(b_, a_);
    return form_swap(mirrored.abp(f));
  }

 private:
  // Integral of x^n A B for a == b == s. In u = x + s the problem is the
  // a = b = 0 case, where
  //   int u^n AB = n(n-1)(n-2)/(2(2n+1)) int u^(n-3) AB + u^(n+1) AB/(2n+1)
  //                - n(n-1) u^(n-2) AB/(2(2n+1)) + n u^(n-1) (AB' + A'B)/(2(2n+1))
  //                - u^n A'B'/(2n+1).
  // x^n = (u - s)^n expands binomially; the u-polynomials are shifted back.
  const BilinearForm& ab_equal_monomial(std::size_t n) {
    if (auto it = equal_cache_.find(n); it != equal_cache_.end()) return it->second;
    BilinearForm in_u(0, 0);
    for (std::size_t k = 0; k <= n; ++k) {
      Rational coef = Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
      if ((n - k) % 2 == 1) coef = -coef;
      for (std::size_t j = 0; j < n - k; ++j) coef *= a_;
      if (sgn(coef) == 0) continue;
      in_u += coef * unshifted_monomial(k);
    }
    BilinearForm out(a_, b_);
    for (Pattern p : kAllPatterns) out[p] = in_u[p].shifted(a_);
    return equal_cache_.emplace(n, std::move(out)).first->second;
  }

  const BilinearForm& unshifted_monomial(std::size_t n) {
    if (auto it = unshifted_cache_.find(n); it != unshifted_cache_.end()) return it->second;
    const long nn = static_cast<long>(n);
    const Rational denom(2 * nn + 1);
    BilinearForm out(0, 0);
    out.p_ab = Polynomial::monomial(n + 1, 1 / denom);
    out.p_apbp = Polynomial::monomial(n, -1 / denom);
    if (n >= 1) {
      const Rational c = Rational(nn) / (2 * denom);
      out.p_abp += Polynomial::monomial(n - 1, c);
      out.p_apb += Polynomial::monomial(n - 1, c);
    }
    if (n >= 2) out.p_ab -= Polynomial::monomial(n - 2, Rational(nn * (nn - 1)) / (2 * denom));
    if (n >= 3) {
      const Rational c = Rational(nn * (nn - 1) * (nn - 2)) / (2 * denom);
      out += c * unshifted_monomial(n - 3);
    }
    return unshifted_cache_.emplace(n, std::move(out)).first->second;
  }

  // Integral of x^n A B for a != b. With F = x^n and f = F' the identity
  //   int f AB + 2 int x f' AB - 1/2 int f''' AB + (a+b) int f' AB - (a-b)^2/2 int F AB
  //     = W(A, f B') - 1/2 W(A, f' B) + (a-b)/2 W(A, F B)
  // is solved for int F AB; the remaining integrals have degree < n.
  const BilinearForm& ab_distinct_monomial(std::size_t n) {
    if (auto it = distinct_cache_.find(n); it != distinct_cache_.end()) return it->second;
    const Rational diff = a_ - b_;
    const Polynomial big_f = Polynomial::monomial(static_cast<unsigned>(n));
    const Polynomial f = differentiate(big_f);
    const Polynomial fp = differentiate(f);
    const Polynomial fppp = differentiate(differentiate(fp));
    const Polynomial lower =
        f + Rational(2) * (Polynomial::monomial(1) * fp) + Rational(a_ + b_) * fp - Rational(1, 2) * fppp;

    BilinearForm rhs = ab(lower);
    rhs -= wronskian_form(f, WronskianOrientation::AgainstBPrime, a_, b_);
    rhs += Rational(1, 2) * wronskian_form(fp, WronskianOrientation::AgainstB, a_, b_);
    rhs -= diff / 2 * wronskian_form(big_f, WronskianOrientation::AgainstB, a_, b_);
    rhs *= Rational(2) / (diff * diff);
    return distinct_cache_.emplace(n, std::move(rhs)).first->second;
  }

  Rational a_;
  Rational b_;
  std::map<std::size_t, BilinearForm> equal_cache_;
  std::map<std::size_t, BilinearForm> unshifted_cache_;
  std::map<std::size_t, BilinearForm> distinct_cache_;
};

}  // namespace

BilinearForm antider_AB_equal(unsigned n, const Rational& shift) {
  Reducer r(shift, shift);
  return r.ab(Polynomial::monomial(n));
}

BilinearForm antider_AB_distinct(unsigned n, const Rational& shift_a, const Rational& shift_b) {
  if (shift_a == shift_b) {
    throw Error(ErrorKind::EqualShifts,
                "distinct-shift reduction needs a != b (got a = b = " + to_string(shift_a) + ")");
  }
  Reducer r(shift_a, shift_b);
  return r.ab(Polynomial::monomial(n));
}

BilinearForm antider_ABp(unsigned n, const Rational& shift_a, const Rational& shift_b) {
  Reducer r(shift_a, shift_b);
  return r.abp(Polynomial::monomial(n));
}

BilinearForm antider_ApB(unsigned n, const Rational& shift_a, const Rational& shift_b) {
  return form_swap(antider_ABp(n, shift_b, shift_a));
}

BilinearForm antider_ApBp(unsigned n, const Rational& shift_a, const Rational& shift_b) {
  Reducer r(shift_a, shift_b);
  return r.apbp(Polynomial::monomial(n));
}

BilinearForm antider_poly(const ReductionRequest& request) {
  Reducer r(request.shift_a, request.shift_b);
  switch (request.pattern) {
    case Pattern::AB: return r.ab(request.f);
    case Pattern::ABp: return r.abp(request.f);
    case Pattern::ApB: return r.apb(request.f);
    case Pattern::ApBp: return r.apbp(request.f);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown pattern");
}

bool differentiate_back_check(const BilinearForm& g, const Polynomial& f, Pattern pattern) {
  return form_differentiate(g) == BilinearForm::single(pattern, f, g.shift_a, g.shift_b);
}

HvtResidual verify_hvt(const HvtOperator& op, const SolutionSpec& spec_a, const SolutionSpec& spec_b,
                       double x1, double x2, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (!std::isfinite(x1) || !std::isfinite(x2) || x1 > x2) {
    throw Error(ErrorKind::InvalidArgument, "verify_hvt needs a finite interval with x1 <= x2");
  }
  const double a = to_double(spec_a.shift());
  const double b = to_double(spec_b.shift());

  struct Values {
    SolutionValue A;
    SolutionValue B;
  };
  auto values = [&](double x) { return Values{eval_solution(spec_a, x), eval_solution(spec_b, x)}; };

  Integrand lhs_integrand;
  Integrand rhs_integrand;
  std::function<double(double)> boundary;

  if (const auto* m = std::get_if<MultiplyBy>(&op)) {
    const Polynomial g = m->g;
    const Polynomial gp = differentiate(g);
    const Polynomial gpp = differentiate(gp);
    // [L, g] B = g'' B + 2 g' B'
    lhs_integrand = [=](double x) {
      const Values v = values(x);
      return v.A.y * (gpp.evaluate(x) * v.B.y + 2.0 * gp.evaluate(x) * v.B.y_prime);
    };
    rhs_integrand = [=](double x) {
      const Values v = values(x);
      return v.A.y * g.evaluate(x) * v.B.y;
    };
    // W(A, gB) = A (g' B + g B') - A' g B
    boundary = [=](double x) {
      const Values v = values(x);
      const double gx = g.evaluate(x);
      return v.A.y * (gp.evaluate(x) * v.B.y + gx * v.B.y_prime) - v.A.y_prime * gx * v.B.y;
    };
  } else {
    const Polynomial f = std::get<PolyTimesD>(op).f;
    const Polynomial fp = differentiate(f);
    const Polynomial fpp = differentiate(fp);
    // [L, fD] B = f'' B' + 2 f' (L + x) B + f B, with L B = b B
    lhs_integrand = [=](double x) {
      const Values v = values(x);
      return v.A.y * (fpp.evaluate(x) * v.B.y_prime + 2.0 * fp.evaluate(x) * (b + x) * v.B.y +
                      f.evaluate(x) * v.B.y);
    };
    rhs_integrand = [=](double x) {
      const Values v = values(x);
      return v.A.y * f.evaluate(x) * v.B.y_prime;
    };
    // W(A, f B') = A (f' B' + f (x+b) B) - A' f B'
    boundary = [=](double x) {
      const Values v = values(x);
      const double fx = f.evaluate(x);
      return v.A.y * (fp.evaluate(x) * v.B.y_prime + fx * (x + b) * v.B.y) - v.A.y_prime * fx * v.B.y_prime;
    };
  }

  HvtResidual out;
  out.lhs = integrate_adaptive(lhs_integrand, x1, x2, tol).value;
  out.rhs = (a - b) * integrate_adaptive(rhs_integrand, x1, x2, tol).value + boundary(x2) - boundary(x1);
  out.residual = std::fabs(out.lhs - out.rhs);
  return out;
}

}  // namespace airyint
