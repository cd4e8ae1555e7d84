#include "airyint/rational.hpp"

#include <cctype>

#include "airyint/errors.hpp"

namespace airyint {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::OverflowDomain: return "OverflowDomain";
    case ErrorKind::ShiftMismatch: return "ShiftMismatch";
    case ErrorKind::EqualShifts: return "EqualShifts";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NonFiniteIntegrand: return "NonFiniteIntegrand";
    case ErrorKind::DivergentIntegrand: return "DivergentIntegrand";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad(whole);
  Integer v(std::string(s), 10);
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) bad(text);
    Integer den(std::string(den_text), 10);
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if (int_part.empty() && frac.empty()) bad(text);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac.empty() && !all_digits(frac))) bad(text);
    Integer digits(std::string(int_part.empty() ? "0" : int_part) + std::string(frac), 10);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational r(negative ? Integer(-digits) : digits, scale);
    r.canonicalize();
    return r;
  }

  return Rational(parse_integer(s, text));
}

std::string to_string(const Rational& value) { return value.get_str(10); }

double to_double(const Rational& value) {
  if (value.get_den() == 1 && mpz_sizeinbase(value.get_num_mpz_t(), 2) <= 53) return value.get_d();
  // 128-bit intermediate so the final rounding to double is the only significant one.
  mpf_class f(value, 128);
  return f.get_d();
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace airyint
