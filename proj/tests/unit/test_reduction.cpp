#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "airyint/errors.hpp"
#include "airyint/quadrature.hpp"
#include "airyint/reduction.hpp"

using namespace airyint;

namespace {

const Polynomial kOne{1};
const Polynomial kX = Polynomial::monomial(1);

struct Shifts {
  Rational a;
  Rational b;
};

const std::vector<Shifts> kEqual = {{0, 0}, {1, 1}, {Rational(-3, 2), Rational(-3, 2)}};
const std::vector<Shifts> kDistinct = {{0, 1}, {-2, Rational(3, 2)}, {Rational(1, 3), Rational(-1, 3)}};

BilinearForm form(const Rational& a, const Rational& b, Polynomial ab, Polynomial abp, Polynomial apb,
                  Polynomial apbp) {
  BilinearForm f(a, b);
  f.p_ab = std::move(ab);
  f.p_abp = std::move(abp);
  f.p_apb = std::move(apb);
  f.p_apbp = std::move(apbp);
  return f;
}

BilinearForm wab(const Polynomial& h, const Rational& a, const Rational& b) {
  return wronskian_form(h, WronskianOrientation::AgainstB, a, b);
}

}  // namespace

TEST(EqualShifts, DegreeZero) {
  EXPECT_EQ(antider_AB_equal(0, 0), form(0, 0, kX, {}, {}, Polynomial{-1}));
}

TEST(EqualShifts, DegreeOne) {
  const BilinearForm want = form(0, 0, Polynomial::monomial(2, Rational(1, 3)), Polynomial{Rational(1, 6)},
                                 Polynomial{Rational(1, 6)}, Polynomial::monomial(1, Rational(-1, 3)));
  EXPECT_EQ(antider_AB_equal(1, 0), want);
}

TEST(EqualShifts, DegreeThreeCarriesRecursiveTerm) {
  // 3/7 * (x AB - A'B') + x^4 AB/7 - 3x AB/7 + 3x^2 (AB' + A'B)/14 - x^3 A'B'/7
  const BilinearForm g0 = antider_AB_equal(0, 0);
  BilinearForm boundary = form(0, 0, Polynomial::monomial(4, Rational(1, 7)) - Polynomial::monomial(1, Rational(3, 7)),
                               Polynomial::monomial(2, Rational(3, 14)), Polynomial::monomial(2, Rational(3, 14)),
                               Polynomial::monomial(3, Rational(-1, 7)));
  EXPECT_EQ(antider_AB_equal(3, 0), Rational(3, 7) * g0 + boundary);
  EXPECT_EQ(antider_AB_equal(3, 0), form(0, 0, Polynomial::monomial(4, Rational(1, 7)),
                                         Polynomial::monomial(2, Rational(3, 14)),
                                         Polynomial::monomial(2, Rational(3, 14)),
                                         Polynomial{Rational(-3, 7), 0, 0, Rational(-1, 7)}));
}

TEST(EqualShifts, ShiftIsTranslation) {
  // With u = x + s, the antiderivative of u^n AB is the unshifted one at u.
  const Rational s(5, 2);
  for (unsigned n = 0; n <= 6; ++n) {
    const BilinearForm base = antider_AB_equal(n, 0);
    BilinearForm moved(s, s);
    for (Pattern p : kAllPatterns) moved[p] = base[p].shifted(s);
    const BilinearForm via_request = antider_poly({Polynomial::monomial(n).shifted(s), Pattern::AB, s, s});
    EXPECT_EQ(via_request, moved) << n;
  }
}

TEST(DistinctShifts, BaseCaseIsWronskianOverShiftGap) {
  for (const Shifts& s : kDistinct) {
    const Rational inv = 1 / Rational(s.b - s.a);
    EXPECT_EQ(antider_AB_distinct(0, s.a, s.b), form(s.a, s.b, {}, Polynomial{inv}, Polynomial{-inv}, {}));
  }
}

TEST(DistinctShifts, SwappedSignBaseCaseDifferentiatesToMinusAB) {
  // (A'B - AB')/(b - a) has derivative (a - b) AB / (b - a) = -AB.
  const Rational a(1, 4), b(-2);
  const Rational inv = 1 / Rational(b - a);
  const BilinearForm swapped_sign = form(a, b, {}, Polynomial{-inv}, Polynomial{inv}, {});
  EXPECT_EQ(form_differentiate(swapped_sign), BilinearForm::single(Pattern::AB, Polynomial{-1}, a, b));
}

TEST(DistinctShifts, DegreeOneFromMasterIdentity) {
  for (const Shifts& s : kDistinct) {
    const Rational d = s.a - s.b;
    BilinearForm inner = antider_AB_distinct(0, s.a, s.b);
    inner -= wronskian_form(kOne, WronskianOrientation::AgainstBPrime, s.a, s.b);
    inner -= d / 2 * wab(kX, s.a, s.b);
    EXPECT_EQ(antider_AB_distinct(1, s.a, s.b), Rational(2) / (d * d) * inner);
  }
}

TEST(DistinctShifts, EqualShiftsRejected) {
  try {
    antider_AB_distinct(2, Rational(1, 2), parse_rational("2/4"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EqualShifts);
  }
}

TEST(ABp, EqualShiftExamples) {
  EXPECT_EQ(antider_ABp(0, 0, 0), Rational(1, 2) * wab(kX, 0, 0));
  EXPECT_EQ(antider_ABp(0, 0, 0), form(0, 0, Polynomial{Rational(1, 2)}, Polynomial::monomial(1, Rational(1, 2)),
                                       Polynomial::monomial(1, Rational(-1, 2)), {}));
  EXPECT_EQ(antider_ABp(1, 0, 0), Rational(-1, 2) * antider_AB_equal(0, 0) +
                                      Rational(1, 2) * wab(Polynomial::monomial(2, Rational(1, 2)), 0, 0));
}

TEST(ABp, DistinctShiftExample) {
  for (const Shifts& s : kDistinct) {
    EXPECT_EQ(antider_ABp(0, s.a, s.b),
              Rational(s.a - s.b) / 2 * antider_AB_distinct(1, s.a, s.b) + Rational(1, 2) * wab(kX, s.a, s.b));
  }
}

TEST(ApB, MirrorOfABp) {
  for (unsigned n = 0; n <= 5; ++n) {
    for (const auto& group : {kEqual, kDistinct}) {
      for (const Shifts& s : group) EXPECT_EQ(antider_ApB(n, s.a, s.b), form_swap(antider_ABp(n, s.b, s.a)));
    }
  }
  EXPECT_EQ(antider_ApB(0, 0, 0), form(0, 0, Polynomial{Rational(1, 2)}, Polynomial::monomial(1, Rational(-1, 2)),
                                       Polynomial::monomial(1, Rational(1, 2)), {}));
}

TEST(ApBp, Examples) {
  EXPECT_EQ(antider_ApBp(0, 0, 0), BilinearForm::single(Pattern::ApB, kOne, 0, 0) - antider_AB_equal(1, 0));
  const Rational b(-3, 2);
  EXPECT_EQ(antider_ApBp(0, b, b),
            BilinearForm::single(Pattern::ApB, kOne, b, b) - antider_AB_equal(1, b) - b * antider_AB_equal(0, b));
  EXPECT_TRUE(antider_poly({Polynomial(), Pattern::ApBp, 0, 1}).is_zero());
}

TEST(AntiderPoly, ZeroAndLinearity) {
  for (Pattern p : kAllPatterns) {
    EXPECT_TRUE(antider_poly({Polynomial(), p, 0, 0}).is_zero());
    EXPECT_TRUE(antider_poly({Polynomial(), p, 1, 0}).is_zero());
  }
  EXPECT_EQ(antider_poly({Polynomial{2, 1}, Pattern::AB, 0, 0}),
            antider_AB_equal(1, 0) + Rational(2) * antider_AB_equal(0, 0));
  const BilinearForm g = antider_poly({Polynomial::monomial(2), Pattern::ApBp, 0, 1});
  EXPECT_TRUE(differentiate_back_check(g, Polynomial::monomial(2), Pattern::ApBp));
}

TEST(AntiderPoly, RandomPolynomialsDifferentiateBack) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5), deg(0, 7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& v : c) {
      v = Rational(num(rng), den(rng));
      v.canonicalize();
    }
    const Polynomial f(std::move(c));
    const Shifts& s = (trial % 2 ? kEqual : kDistinct)[trial % 3];
    const Pattern p = kAllPatterns[trial % 4];
    EXPECT_TRUE(differentiate_back_check(antider_poly({f, p, s.a, s.b}), f, p)) << trial;
  }
}

TEST(DifferentiateBackCheck, Examples) {
  EXPECT_TRUE(differentiate_back_check(antider_AB_equal(0, 0), kOne, Pattern::AB));
  EXPECT_FALSE(differentiate_back_check(BilinearForm::single(Pattern::AB, kX, 0, 0), kOne, Pattern::AB));
  EXPECT_TRUE(differentiate_back_check(antider_AB_distinct(5, 0, 1), Polynomial::monomial(5), Pattern::AB));
  EXPECT_FALSE(differentiate_back_check(antider_AB_distinct(5, 0, 1), Polynomial::monomial(5), Pattern::ABp));
}

TEST(RoundTrip, EqualShiftsUpToThirty) {
  for (const Shifts& s : kEqual) {
    for (unsigned n = 0; n <= 30; ++n) {
      EXPECT_TRUE(differentiate_back_check(antider_AB_equal(n, s.a), Polynomial::monomial(n), Pattern::AB))
          << "n=" << n << " s=" << s.a;
    }
  }
}

TEST(RoundTrip, DistinctShiftsUpToTwenty) {
  for (const Shifts& s : kDistinct) {
    for (unsigned n = 0; n <= 20; ++n) {
      EXPECT_TRUE(differentiate_back_check(antider_AB_distinct(n, s.a, s.b), Polynomial::monomial(n), Pattern::AB))
          << "n=" << n << " a=" << s.a << " b=" << s.b;
    }
  }
}

TEST(RoundTrip, DerivativePatternsUpToTwelve) {
  for (const auto& group : {kEqual, kDistinct}) {
    for (const Shifts& s : group) {
      for (unsigned n = 0; n <= 12; ++n) {
        const Polynomial f = Polynomial::monomial(n);
        EXPECT_TRUE(differentiate_back_check(antider_ABp(n, s.a, s.b), f, Pattern::ABp)) << n;
        EXPECT_TRUE(differentiate_back_check(antider_ApB(n, s.a, s.b), f, Pattern::ApB)) << n;
        EXPECT_TRUE(differentiate_back_check(antider_ApBp(n, s.a, s.b), f, Pattern::ApBp)) << n;
      }
    }
  }
}

TEST(RoundTrip, SwapCoherence) {
  for (const Shifts& s : kDistinct) {
    for (unsigned n = 0; n <= 8; ++n) {
      EXPECT_EQ(form_swap(antider_AB_distinct(n, s.a, s.b)), antider_AB_distinct(n, s.b, s.a)) << n;
    }
  }
}

TEST(NumericAgreement, ClosedFormMatchesQuadrature) {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> ends(-6.0, 3.0), amp(-2.0, 2.0);
  std::uniform_int_distribution<unsigned> degree(0, 6);
  std::vector<Shifts> all = kEqual;
  all.insert(all.end(), kDistinct.begin(), kDistinct.end());
  for (int trial = 0; trial < 24; ++trial) {
    const Shifts& s = all[trial % all.size()];
    const Pattern p = kAllPatterns[(trial / 6) % 4];
    const unsigned n = degree(rng);
    double x1 = ends(rng), x2 = ends(rng);
    if (x1 > x2) std::swap(x1, x2);
    const SolutionSpec sa(amp(rng), amp(rng), s.a), sb(amp(rng), amp(rng), s.b);
    const Polynomial f = Polynomial::monomial(n);
    const BilinearForm g = antider_poly({f, p, s.a, s.b});
    const double closed = form_eval_between(g, sa, sb, x1, x2);
    const double quad = integrate_adaptive(
                            [&](double x) {
                              const SolutionValue u = eval_solution(sa, x), v = eval_solution(sb, x);
                              const double ua = (p == Pattern::ApB || p == Pattern::ApBp) ? u.y_prime : u.y;
                              const double vb = (p == Pattern::ABp || p == Pattern::ApBp) ? v.y_prime : v.y;
                              return f.evaluate(x) * ua * vb;
                            },
                            x1, x2, 1e-13)
                            .value;
    EXPECT_LE(std::fabs(closed - quad), 1e-9 * (1 + std::fabs(quad)))
        << "trial " << trial << " pattern " << to_string(p) << " n=" << n;
  }
}

TEST(NumericAgreement, LargeEndpointValuesCancelExactly) {
  // Endpoint values near 1.6e18 with a definite value near 3.4e4.
  const Rational a(1, 3), b(-1, 3);
  const SolutionSpec sa(-0.33833230387930624, -1.872219975847083, a);
  const SolutionSpec sb(0.23490137194978322, 0.25637769716997205, b);
  const BilinearForm g = antider_ApBp(8, a, b);
  const double x1 = -4.9438388533195514, x2 = 1.8987762028189117;
  ASSERT_GT(std::fabs(form_eval(g, sa, sb, x1)), 1e17);
  const double quad = integrate_adaptive(
                          [&](double x) {
                            return std::pow(x, 8) * eval_solution(sa, x).y_prime * eval_solution(sb, x).y_prime;
                          },
                          x1, x2, 1e-12)
                          .value;
  const double closed = form_eval_between(g, sa, sb, x1, x2);
  EXPECT_LE(std::fabs(closed - quad), 1e-9 * (1 + std::fabs(quad)));
  EXPECT_EQ(form_eval_between(g, sa, sb, x2, x1), -closed);
}

TEST(Hypervirial, ConstantOperatorGivesBaseCaseIdentity) {
  const SolutionSpec a = SolutionSpec::ai(0), b = SolutionSpec(0.3, 0.7, 1);
  const HvtResidual r = verify_hvt(MultiplyBy{kOne}, a, b, -4.0, 1.5, 1e-13);
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_LT(r.residual, 1e-10);
}

TEST(Hypervirial, PolynomialOperatorsOnShiftedAi) {
  const SolutionSpec a = SolutionSpec::ai(0), b = SolutionSpec::ai(1);
  EXPECT_LT(verify_hvt(MultiplyBy{Polynomial::monomial(2)}, a, b, -3.0, 2.0, 1e-13).residual, 1e-8);
  EXPECT_LT(verify_hvt(PolyTimesD{kX}, a, b, -3.0, 2.0, 1e-13).residual, 1e-8);
  // Mixed solutions and equal shifts.
  const SolutionSpec c(1.0, -0.5, Rational(-1, 2)), d(0.25, 2.0, Rational(-1, 2));
  EXPECT_LT(verify_hvt(PolyTimesD{Polynomial{1, -1, 2}}, c, d, -5.0, 1.0, 1e-13).residual, 1e-8);
}

TEST(Hypervirial, RejectsReversedInterval) {
  const SolutionSpec a = SolutionSpec::ai(0), b = SolutionSpec::ai(1);
  EXPECT_THROW(verify_hvt(MultiplyBy{kOne}, a, b, 2.0, -3.0, 1e-10), Error);
  EXPECT_THROW(verify_hvt(MultiplyBy{kOne}, a, b, -3.0, 2.0, 0.0), Error);
}
