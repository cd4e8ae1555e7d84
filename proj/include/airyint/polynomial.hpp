#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "airyint/rational.hpp"

namespace airyint {

/// Univariate polynomial in x with exact rational coefficients, stored in
/// ascending powers. The zero polynomial is the empty sequence; otherwise the
/// highest stored coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(unsigned power, const Rational& c = 1);
  /// x + s
  static Polynomial linear_shift(const Rational& s);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const;

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;

  /// p(x + s), by Taylor shift.
  Polynomial shifted(const Rational& s) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

Polynomial differentiate(const Polynomial& p);

/// Antiderivative with zero constant term.
Polynomial antidifferentiate(const Polynomial& p);

/// Human-readable rendering such as "1/3*x^2 - x + 2".
std::string to_string(const Polynomial& p);

}  // namespace airyint
