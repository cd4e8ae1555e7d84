#include "airyint/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "airyint/errors.hpp"

namespace airyint {
namespace {

// Nodes on [0, 1] of the 21-point Kronrod rule with the weights of both the
// Kronrod rule and its embedded 10-point Gauss rule (zero off the Gauss nodes).
struct KronrodRule {
  std::array<double, 11> nodes{};
  std::array<double, 11> kronrod_weights{};
  std::array<double, 11> gauss_weights{};
};

const KronrodRule& rule() {
  static const KronrodRule r = [] {
    KronrodRule out;
    const auto& kx = boost::math::quadrature::gauss_kronrod<double, 21>::abscissa();
    const auto& kw = boost::math::quadrature::gauss_kronrod<double, 21>::weights();
    const auto& gx = boost::math::quadrature::gauss<double, 10>::abscissa();
    const auto& gw = boost::math::quadrature::gauss<double, 10>::weights();
    for (std::size_t i = 0; i < out.nodes.size(); ++i) {
      out.nodes[i] = kx[i];
      out.kronrod_weights[i] = kw[i];
      for (std::size_t j = 0; j < gx.size(); ++j) {
        if (std::fabs(gx[j] - kx[i]) < 1e-14) out.gauss_weights[i] = gw[j];
      }
    }
    return out;
  }();
  return r;
}

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Panel& a, const Panel& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.lo > b.lo;
  }
};

double checked(const Integrand& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) throw Error(ErrorKind::NonFiniteIntegrand, "integrand is not finite");
  return v;
}

Panel apply_rule(const Integrand& f, double lo, double hi) {
  const KronrodRule& r = rule();
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double kronrod = 0.0;
  double gauss = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    if (r.nodes[i] == 0.0) {
      const double v = checked(f, center);
      kronrod += r.kronrod_weights[i] * v;
      gauss += r.gauss_weights[i] * v;
      continue;
    }
    const double dx = half * r.nodes[i];
    const double v = checked(f, center - dx) + checked(f, center + dx);
    kronrod += r.kronrod_weights[i] * v;
    gauss += r.gauss_weights[i] * v;
  }
  return {lo, hi, kronrod * half, std::fabs((kronrod - gauss) * half)};
}

constexpr std::size_t kEvaluationsPerPanel = 21;

}  // namespace

QuadratureResult integrate_adaptive(const Integrand& integrand, double x1, double x2, double tol,
                                    std::size_t max_evaluations) {
  if (!std::isfinite(x1) || !std::isfinite(x2)) {
    throw Error(ErrorKind::InvalidArgument, "integration limits must be finite");
  }
  if (x1 > x2) throw Error(ErrorKind::InvalidArgument, "integration requires x1 <= x2");
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (x1 == x2) return {};

  std::priority_queue<Panel, std::vector<Panel>, ByError> panels;
  std::size_t evaluations = kEvaluationsPerPanel;
  Panel first = apply_rule(integrand, x1, x2);
  double value = first.value;
  double error = first.error;
  panels.push(first);

  while (error > std::max(tol, tol * std::fabs(value))) {
    if (evaluations + 2 * kEvaluationsPerPanel > max_evaluations) {
      throw Error(ErrorKind::NonConvergence,
                  "adaptive quadrature exhausted its budget of " + std::to_string(max_evaluations) +
                      " evaluations (error estimate " + std::to_string(error) + ")");
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = apply_rule(integrand, worst.lo, mid);
    const Panel right = apply_rule(integrand, mid, worst.hi);
    evaluations += 2 * kEvaluationsPerPanel;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum in left-to-right order to shed the incremental drift.
  std::vector<Panel> all;
  all.reserve(panels.size());
  while (!panels.empty()) {
    all.push_back(panels.top());
    panels.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  QuadratureResult result;
  for (const Panel& p : all) {
    result.value += p.value;
    result.error_estimate += p.error;
  }
  result.evaluations = evaluations;
  return result;
}

double improper_truncation_point(double x1, double tol, const SolutionSpec& witness_a,
                                 const SolutionSpec& witness_b) {
  // Ai(t)^2 ~ exp(-(4/3) t^(3/2)); demand (4/3) t^(3/2) >= 2 ln(2 C / tol)
  // with the amplitudes folded into C.
  const double amplitude = std::max(1.0, std::fabs(witness_a.c1() * witness_b.c1()));
  const double exponent = 2.0 * std::log(2.0 * amplitude / tol);
  const double t = std::pow(0.75 * std::max(exponent, 0.0), 2.0 / 3.0);
  const double lowest_shift = std::min(to_double(witness_a.shift()), to_double(witness_b.shift()));
  const double highest_shift = std::max(to_double(witness_a.shift()), to_double(witness_b.shift()));
  const double ceiling = kAiryDomainLimit - highest_shift;
  return std::clamp(t - lowest_shift, x1, std::max(x1, ceiling));
}

QuadratureResult integrate_improper(const Integrand& integrand, double x1, double tol,
                                    const SolutionSpec& witness_a, const SolutionSpec& witness_b) {
  if (!witness_a.pure_ai() || !witness_b.pure_ai()) {
    throw Error(ErrorKind::DivergentIntegrand,
                "integral to +infinity diverges: a solution has a Bi component");
  }
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  double upper = improper_truncation_point(x1, tol, witness_a, witness_b);
  // Polynomial weights can delay the decay; push on while the integrand is
  // still visible at the cut.
  const double ceiling =
      kAiryDomainLimit - std::max(to_double(witness_a.shift()), to_double(witness_b.shift()));
  QuadratureResult probe;
  while (upper + 0.5 <= ceiling && std::fabs(checked(integrand, upper)) > 1e-3 * tol) {
    upper += 0.5;
    ++probe.evaluations;
  }
  QuadratureResult r = integrate_adaptive(integrand, x1, upper, tol / 2);
  r.evaluations += probe.evaluations;
  return r;
}

}  // namespace airyint
