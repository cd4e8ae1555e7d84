#include "airyint/cli.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "airyint/errors.hpp"
#include "airyint/json_render.hpp"
#include "airyint/quadrature.hpp"
#include "airyint/reduction.hpp"

namespace airyint::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

double parse_real(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid " + what + " '" + text + "'");
  }
}

Rational parse_exact(const std::string& text, const std::string& what) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw UsageError("invalid " + what + " '" + text + "' (expected p, p/q or a decimal)");
  }
}

Polynomial parse_poly(const std::string& text) {
  std::vector<Rational> coeffs;
  for (const auto& part : split_commas(text)) coeffs.push_back(parse_exact(part, "--poly coefficient"));
  if (coeffs.empty()) throw UsageError("--poly needs at least one coefficient");
  return Polynomial(std::move(coeffs));
}

SolutionSpec parse_solution(const std::string& text, const Rational& shift, const std::string& flag) {
  const auto parts = split_commas(text);
  if (parts.size() != 2) throw UsageError(flag + " expects 'c1,c2'");
  const double c1 = parse_real(parts[0], flag + " amplitude");
  const double c2 = parse_real(parts[1], flag + " amplitude");
  if (c1 == 0.0 && c2 == 0.0) throw UsageError(flag + " amplitudes must not both be zero");
  return SolutionSpec(c1, c2, shift);
}

/// Options shared by `indefinite` and `definite`.
struct QueryOptions {
  std::optional<unsigned> n;
  std::string poly;
  std::string pattern;
  std::string a = "0";
  std::string b = "0";
  bool json = false;

  void attach(CLI::App& cmd) {
    auto* n_opt = cmd.add_option("--n", n, "monomial degree k (integrand weight x^k)");
    auto* poly_opt = cmd.add_option("--poly", poly, "weight polynomial as ascending exact coefficients, e.g. 0,1,1/2");
    n_opt->excludes(poly_opt);
    poly_opt->excludes(n_opt);
    cmd.add_option("--pattern", pattern, "integrand pattern")
        ->required()
        ->check(CLI::IsMember({"AB", "ABp", "ApB", "ApBp"}));
    cmd.add_option("--a", a, "exact shift (eigenvalue) of A")->capture_default_str();
    cmd.add_option("--b", b, "exact shift (eigenvalue) of B")->capture_default_str();
    cmd.add_flag("--json", json, "machine-readable output");
  }

  ReductionRequest request() const {
    if (!n && poly.empty()) throw UsageError("one of --n or --poly is required");
    ReductionRequest req;
    req.f = n ? Polynomial::monomial(*n) : parse_poly(poly);
    req.pattern = parse_pattern(pattern);
    req.shift_a = parse_exact(a, "--a");
    req.shift_b = parse_exact(b, "--b");
    return req;
  }
};

int cmd_indefinite(const QueryOptions& q, std::ostream& out) {
  const BilinearForm g = antider_poly(q.request());
  if (q.json) {
    out << render_json(form_to_json(g)) << "\n";
  } else {
    out << to_string(g);
  }
  return kExitOk;
}

struct DefiniteOptions {
  std::string sol1 = "1,0";
  std::string sol2 = "1,0";
  std::string from;
  std::string to;
  bool check = false;
  double tol = 1e-9;

  void attach(CLI::App& cmd) {
    cmd.add_option("--sol1", sol1, "amplitudes c1,c2 of A = c1 Ai + c2 Bi")->capture_default_str();
    cmd.add_option("--sol2", sol2, "amplitudes c1,c2 of B = c1 Ai + c2 Bi")->capture_default_str();
    cmd.add_option("--from", from, "lower limit")->required();
    cmd.add_option("--to", to, "upper limit (a real or 'inf')")->required();
    cmd.add_flag("--check", check, "cross-check against adaptive quadrature");
    cmd.add_option("--tol", tol, "cross-check tolerance, relative to 1 + |value|")->capture_default_str()
        ->check(CLI::PositiveNumber);
  }
};

Integrand make_integrand(const Polynomial& f, Pattern pattern, const SolutionSpec& s1, const SolutionSpec& s2) {
  return [f, pattern, s1, s2](double x) {
    const SolutionValue a = eval_solution(s1, x);
    const SolutionValue b = eval_solution(s2, x);
    const double w = f.evaluate(x);
    switch (pattern) {
      case Pattern::AB: return w * a.y * b.y;
      case Pattern::ABp: return w * a.y * b.y_prime;
      case Pattern::ApB: return w * a.y_prime * b.y;
      case Pattern::ApBp: break;
    }
    return w * a.y_prime * b.y_prime;
  };
}

int cmd_definite(const QueryOptions& q, const DefiniteOptions& d, std::ostream& out, std::ostream& err) {
  const ReductionRequest req = q.request();
  const SolutionSpec s1 = parse_solution(d.sol1, req.shift_a, "--sol1");
  const SolutionSpec s2 = parse_solution(d.sol2, req.shift_b, "--sol2");
  const double lo = parse_real(d.from, "--from");
  const bool to_infinity = d.to == "inf" || d.to == "+inf" || d.to == "infinity";
  const double hi = to_infinity ? 0.0 : parse_real(d.to, "--to");

  if (to_infinity && (!s1.pure_ai() || !s2.pure_ai())) {
    throw Error(ErrorKind::DivergentIntegrand,
                "integral to +inf diverges: both solutions must be pure Ai (c2 = 0)");
  }

  const BilinearForm g = antider_poly(req);
  // Pure-Ai forms vanish at +inf (super-exponential decay beats any polynomial).
  const double value = to_infinity ? -form_eval(g, s1, s2, lo) : form_eval_between(g, s1, s2, lo, hi);

  std::optional<double> crosscheck;
  if (d.check) {
    const Integrand integrand = make_integrand(req.f, req.pattern, s1, s2);
    const double qtol = std::max(d.tol * 1e-2, 1e-14);
    if (to_infinity) {
      crosscheck = integrate_improper(integrand, lo, qtol, s1, s2).value;
    } else if (lo <= hi) {
      crosscheck = integrate_adaptive(integrand, lo, hi, qtol).value;
    } else {
      crosscheck = -integrate_adaptive(integrand, hi, lo, qtol).value;
    }
  }
  const double diff = crosscheck ? std::fabs(value - *crosscheck) : 0.0;

  if (q.json) {
    Json j;
    j["value"] = value;
    j["crosscheck"] = crosscheck ? Json(*crosscheck) : Json(nullptr);
    j["abs_diff"] = crosscheck ? Json(diff) : Json(nullptr);
    out << render_json(j) << "\n";
  } else {
    out << "value: " << fmt17(value) << "\n";
    if (crosscheck) {
      out << "crosscheck: " << fmt17(*crosscheck) << "\n";
      out << "abs_diff: " << fmt17(diff) << "\n";
    }
  }
  if (crosscheck && diff > d.tol * (1.0 + std::fabs(value))) {
    err << "crosscheck discrepancy " << fmt17(diff) << " exceeds tolerance " << fmt17(d.tol)
        << " * (1 + |value|)\n";
    return kExitCrosscheck;
  }
  return kExitOk;
}

struct CheckOptions {
  std::string suite;
  unsigned max_n = 10;
  std::vector<double> interval = {-3.0, 2.0};
  std::optional<double> tol;

  void attach(CLI::App& cmd) {
    cmd.add_option("suite", suite, "hvt, roundtrip or wronskian")
        ->required()
        ->check(CLI::IsMember({"hvt", "roundtrip", "wronskian"}));
    cmd.add_option("--max-n", max_n, "largest monomial degree for roundtrip")->capture_default_str();
    cmd.add_option("--interval", interval, "interval lo hi for hvt")->expected(2);
    cmd.add_option("--tol", tol, "pass threshold (hvt: 1e-8, wronskian: 1e-12)")->check(CLI::PositiveNumber);
  }
};

struct ShiftPair {
  Rational a;
  Rational b;
};

std::vector<ShiftPair> roundtrip_shift_pairs() {
  return {{0, 0}, {1, 1}, {Rational(-3, 2), Rational(-3, 2)},
          {0, 1}, {-2, Rational(3, 2)}, {Rational(1, 3), Rational(-1, 3)}};
}

int check_roundtrip(unsigned max_n, std::ostream& out) {
  std::size_t failures = 0, total = 0;
  for (const ShiftPair& s : roundtrip_shift_pairs()) {
    for (Pattern p : kAllPatterns) {
      for (unsigned n = 0; n <= max_n; ++n) {
        const Polynomial f = Polynomial::monomial(n);
        const BilinearForm g = antider_poly({f, p, s.a, s.b});
        const bool ok = differentiate_back_check(g, f, p);
        ++total;
        if (!ok) ++failures;
        out << (ok ? "PASS" : "FAIL") << " roundtrip pattern=" << to_string(p) << " n=" << n
            << " a=" << to_string(s.a) << " b=" << to_string(s.b) << "\n";
      }
    }
  }
  out << (total - failures) << "/" << total << " roundtrip cases passed\n";
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int check_wronskian(double tol, std::ostream& out) {
  constexpr int kPoints = 151;
  const double expected = std::numbers::inv_pi;
  const SolutionSpec ai = SolutionSpec::ai();
  const SolutionSpec bi = SolutionSpec::bi();
  std::size_t failures = 0;
  double worst = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const double x = -10.0 + 15.0 * i / (kPoints - 1);
    const double dev = std::fabs(wronskian_numeric(ai, bi, x) - expected);
    worst = std::max(worst, dev);
    const bool ok = dev <= tol;
    if (!ok) ++failures;
    out << (ok ? "PASS" : "FAIL") << " wronskian x=" << fmt17(x) << " |W - 1/pi|=" << fmt17(dev) << "\n";
  }
  out << (kPoints - failures) << "/" << kPoints << " grid points within " << tol
      << " of 1/pi (max deviation " << fmt17(worst) << ")\n";
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int check_hvt(double lo, double hi, double tol, std::ostream& out) {
  const SolutionSpec a = SolutionSpec::ai(0);
  const SolutionSpec b = SolutionSpec::ai(1);
  const std::vector<std::pair<std::string, HvtOperator>> ops = {
      {"1", MultiplyBy{Polynomial{1}}},
      {"x^2", MultiplyBy{Polynomial::monomial(2)}},
      {"x^3", MultiplyBy{Polynomial::monomial(3)}},
      {"x*D", PolyTimesD{Polynomial::monomial(1)}},
      {"x^2*D", PolyTimesD{Polynomial::monomial(2)}},
  };
  std::size_t failures = 0;
  for (const auto& [name, op] : ops) {
    const HvtResidual r = verify_hvt(op, a, b, lo, hi, 1e-13);
    const bool ok = r.residual < tol;
    if (!ok) ++failures;
    out << (ok ? "PASS" : "FAIL") << " hvt O=" << name << " lhs=" << fmt17(r.lhs) << " rhs=" << fmt17(r.rhs)
        << " residual=" << fmt17(r.residual) << "\n";
  }
  out << (ops.size() - failures) << "/" << ops.size() << " operators with residual below " << tol
      << "\n";
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_check(const CheckOptions& c, std::ostream& out) {
  if (c.suite == "roundtrip") return check_roundtrip(c.max_n, out);
  if (c.suite == "wronskian") return check_wronskian(c.tol.value_or(1e-12), out);
  if (c.interval.size() != 2 || !(c.interval[0] < c.interval[1])) {
    throw UsageError("--interval expects lo hi with lo < hi");
  }
  return check_hvt(c.interval[0], c.interval[1], c.tol.value_or(1e-8), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form integrals of products of Airy-equation solutions", "airyint"};
  app.require_subcommand(1);

  QueryOptions indefinite_query;
  auto* indefinite = app.add_subcommand("indefinite", "print the exact antiderivative");
  indefinite_query.attach(*indefinite);

  QueryOptions definite_query;
  DefiniteOptions definite_opts;
  auto* definite = app.add_subcommand("definite", "evaluate the closed form between two limits");
  definite_query.attach(*definite);
  definite_opts.attach(*definite);

  CheckOptions check_opts;
  auto* check = app.add_subcommand("check", "run a verification suite");
  check_opts.attach(*check);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*indefinite) return cmd_indefinite(indefinite_query, out);
    if (*definite) return cmd_definite(definite_query, definite_opts, out, err);
    return cmd_check(check_opts, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidArgument ? kExitUsage : kExitDomain;
  }
}

}  // namespace airyint::cli
