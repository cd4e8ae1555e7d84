#include "airyint/airy.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "airyint/errors.hpp"
#include "airy_wide.hpp"

namespace airyint {
namespace {

using quad = __float128;

// Ai(0) = 3^(-2/3)/Gamma(2/3), -Ai'(0) = 3^(-1/3)/Gamma(1/3) and sqrt(3),
// each split as hi + lo doubles to carry ~32 significant digits.
constexpr double kAi0Hi = 0.3550280538878172;
constexpr double kAi0Lo = 2.05233632436212e-17;
constexpr double kMinusAip0Hi = 0.2588194037928068;
constexpr double kMinusAip0Lo = -2.522243111610832e-17;
constexpr double kSqrt3Hi = 1.7320508075688772;
constexpr double kSqrt3Lo = 1.0035084221806903e-16;

constexpr long double kPi = 3.141592653589793238462643383279502884L;

quad abs_q(quad v) { return v < 0 ? -v : v; }

// Ai = c1*f - c2*g, Bi = sqrt(3)*(c1*f + c2*g) with
//   f = sum a_k x^(3k),   a_k = a_(k-1) / ((3k-1)(3k)),  a_0 = 1
//   g = sum b_k x^(3k+1), b_k = b_(k-1) / ((3k)(3k+1)),  b_0 = 1
detail::WideBasis eval_series_wide(quad x) {
  const quad x3 = x * x * x;
  quad f = 1, fp = 0, g = x, gp = 1;
  quad p = x * x / 6;  // a_k x^(3k-1)
  quad q = 1;          // b_k x^(3k)
  for (int k = 1; k < 200; ++k) {
    if (k > 1) p *= x3 / quad((3 * k - 1) * (3 * k));
    q *= x3 / quad((3 * k) * (3 * k + 1));
    const quad df = p * x, dfp = p * (3 * k), dg = q * x, dgp = q * (3 * k + 1);
    f += df;
    fp += dfp;
    g += dg;
    gp += dgp;
    const quad step = abs_q(df) + abs_q(dfp) + abs_q(dg) + abs_q(dgp);
    const quad scale = abs_q(f) + abs_q(fp) + abs_q(g) + abs_q(gp);
    if (step <= quad(1e-34) * scale) break;
  }
  const quad c1 = quad(kAi0Hi) + quad(kAi0Lo);
  const quad c2 = quad(kMinusAip0Hi) + quad(kMinusAip0Lo);
  const quad sqrt3 = quad(kSqrt3Hi) + quad(kSqrt3Lo);
  return {c1 * f - c2 * g, c1 * fp - c2 * gp, sqrt3 * (c1 * f + c2 * g), sqrt3 * (c1 * fp + c2 * gp)};
}

BasisValues eval_series(double x) {
  const detail::WideBasis w = eval_series_wide(x);
  return {static_cast<double>(w.ai), static_cast<double>(w.ai_prime), static_cast<double>(w.bi),
          static_cast<double>(w.bi_prime)};
}

// Coefficients of the large-argument expansions:
//   u_k = (6k-5)(6k-3)(6k-1) / (216 k (2k-1)) * u_(k-1),  v_k = -(6k+1)/(6k-1) u_k
constexpr int kMaxTerms = 80;

struct AsymptoticCoefficients {
  std::array<long double, kMaxTerms> u{};
  std::array<long double, kMaxTerms> v{};
};

const AsymptoticCoefficients& coefficients() {
  static const AsymptoticCoefficients table = [] {
    AsymptoticCoefficients t;
    t.u[0] = 1.0L;
    t.v[0] = 1.0L;
    for (int k = 1; k < kMaxTerms; ++k) {
      const long double kk = k;
      t.u[k] = t.u[k - 1] * (6 * kk - 5) * (6 * kk - 3) * (6 * kk - 1) / (216 * kk * (2 * kk - 1));
      t.v[k] = -(6 * kk + 1) / (6 * kk - 1) * t.u[k];
    }
    return t;
  }();
  return table;
}

// Number of terms of sum c_k / zeta^k to keep under the smallest-term rule.
int truncation(const std::array<long double, kMaxTerms>& c, long double zeta) {
  long double prev = std::fabs(c[0]);
  long double power = 1.0L;
  for (int k = 1; k < kMaxTerms; ++k) {
    power /= zeta;
    const long double term = std::fabs(c[k]) * power;
    if (term >= prev) return k;
    if (term < 1e-21L) return k + 1;
    prev = term;
  }
  return kMaxTerms;
}

// sum_k sign^k c_k / zeta^k over the first `terms` entries.
long double plain_sum(const std::array<long double, kMaxTerms>& c, long double zeta, int terms, int sign) {
  long double acc = 0.0L;
  long double power = 1.0L;
  for (int k = 0; k < terms; ++k) {
    acc += (k % 2 == 1 && sign < 0 ? -c[k] : c[k]) * power;
    power /= zeta;
  }
  return acc;
}

// Even part sum (-1)^j c_2j / zeta^2j and odd part sum (-1)^j c_(2j+1) / zeta^(2j+1).
std::pair<long double, long double> split_sum(const std::array<long double, kMaxTerms>& c,
                                              long double zeta, int terms) {
  long double even = 0.0L, odd = 0.0L;
  long double power = 1.0L;
  for (int k = 0; k < terms; ++k) {
    const long double term = c[k] * power;
    const int j = k / 2;
    const long double signed_term = (j % 2 == 0) ? term : -term;
    if (k % 2 == 0) {
      even += signed_term;
    } else {
      odd += signed_term;
    }
    power /= zeta;
  }
  return {even, odd};
}

BasisValues eval_asymptotic_positive(double xd) {
  const auto& t = coefficients();
  const long double x = xd;
  const long double root = std::sqrt(x);
  const long double zeta = 2.0L * x * root / 3.0L;
  const long double quarter = std::sqrt(root);
  const long double sqrt_pi = std::sqrt(kPi);
  const int nu = truncation(t.u, zeta);
  const int nv = truncation(t.v, zeta);
  const long double decay = std::exp(-zeta);
  const long double growth = std::exp(zeta);
  return {
      static_cast<double>(decay / (2 * sqrt_pi * quarter) * plain_sum(t.u, zeta, nu, -1)),
      static_cast<double>(-quarter * decay / (2 * sqrt_pi) * plain_sum(t.v, zeta, nv, -1)),
      static_cast<double>(growth / (sqrt_pi * quarter) * plain_sum(t.u, zeta, nu, +1)),
      static_cast<double>(quarter * growth / sqrt_pi * plain_sum(t.v, zeta, nv, +1)),
  };
}

BasisValues eval_asymptotic_negative(double xd) {
  const auto& t = coefficients();
  const long double s = -static_cast<long double>(xd);
  const long double root = std::sqrt(s);
  const long double zeta = 2.0L * s * root / 3.0L;
  const long double quarter = std::sqrt(root);
  const long double sqrt_pi = std::sqrt(kPi);
  const long double phase = zeta - kPi / 4.0L;
  const long double sn = std::sin(phase);
  const long double cs = std::cos(phase);
  const auto [pu, qu] = split_sum(t.u, zeta, truncation(t.u, zeta));
  const auto [pv, qv] = split_sum(t.v, zeta, truncation(t.v, zeta));
  const long double amp = 1.0L / (sqrt_pi * quarter);
  const long double amp_prime = quarter / sqrt_pi;
  return {
      static_cast<double>(amp * (cs * pu + sn * qu)),
      static_cast<double>(amp_prime * (sn * pv - cs * qv)),
      static_cast<double>(amp * (-sn * pu + cs * qu)),
      static_cast<double>(amp_prime * (cs * pv + sn * qv)),
  };
}

}  // namespace

BasisValues eval_airy_basis(double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::NonFinite, "Airy argument is not finite");
  if (std::fabs(x) > kAiryDomainLimit) {
    throw Error(ErrorKind::OverflowDomain,
                "Airy argument " + std::to_string(x) + " outside |x| <= 50");
  }
  if (std::fabs(x) <= kAirySeriesLimit) return eval_series(x);
  return x > 0 ? eval_asymptotic_positive(x) : eval_asymptotic_negative(x);
}

namespace detail {

WideBasis eval_airy_basis_wide(wide x) {
  const double xd = static_cast<double>(x);
  if (std::fabs(xd) <= kAirySeriesLimit && std::isfinite(xd)) return eval_series_wide(x);
  const BasisValues v = eval_airy_basis(xd);
  return {v.ai, v.ai_prime, v.bi, v.bi_prime};
}

wide to_wide(const Rational& value) {
  // Three-double split of a 256-bit float image of the rational.
  mpf_class rest(value, 256);
  wide out = 0;
  for (int i = 0; i < 3; ++i) {
    const double part = rest.get_d();
    out += part;
    rest -= part;
  }
  return out;
}

}  // namespace detail

SolutionSpec::SolutionSpec(double c1, double c2, Rational shift)
    : c1_(c1), c2_(c2), shift_(std::move(shift)) {
  if (!std::isfinite(c1) || !std::isfinite(c2)) {
    throw Error(ErrorKind::InvalidArgument, "solution amplitudes must be finite");
  }
  if (c1 == 0.0 && c2 == 0.0) {
    throw Error(ErrorKind::InvalidArgument, "solution amplitudes (c1, c2) must not both be zero");
  }
}

SolutionValue eval_solution(const SolutionSpec& spec, double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::NonFinite, "evaluation point is not finite");
  const BasisValues v = eval_airy_basis(x + to_double(spec.shift()));
  return {spec.c1() * v.ai + spec.c2() * v.bi, spec.c1() * v.ai_prime + spec.c2() * v.bi_prime};
}

double wronskian_numeric(const SolutionSpec& spec1, const SolutionSpec& spec2, double x) {
  if (spec1.shift() != spec2.shift()) {
    throw Error(ErrorKind::ShiftMismatch, "Wronskian requires equal shifts");
  }
  const SolutionValue a = eval_solution(spec1, x);
  const SolutionValue b = eval_solution(spec2, x);
  return a.y * b.y_prime - a.y_prime * b.y;
}

}  // namespace airyint
