#include "airyint/polynomial.hpp"

#include <utility>

namespace airyint {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  normalize();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(unsigned power, const Rational& c) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_shift(const Rational& s) { return Polynomial{s, Rational(1)}; }

void Polynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

Polynomial Polynomial::shifted(const Rational& s) const {
  if (sgn(s) == 0 || coeffs_.size() < 2) return *this;
  // Repeated synthetic division (Horner's scheme for the Taylor shift).
  std::vector<Rational> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += s * c[j];
  }
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial differentiate(const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() < 2) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * static_cast<unsigned long>(k);
  return Polynomial(std::move(out));
}

Polynomial antidifferentiate(const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.empty()) return {};
  std::vector<Rational> out(c.size() + 1);
  for (std::size_t k = 0; k < c.size(); ++k) out[k + 1] = c[k] / static_cast<unsigned long>(k + 1);
  return Polynomial(std::move(out));
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    Rational mag = abs(c[k]);
    if (out.empty()) {
      if (sgn(c[k]) < 0) out += "-";
    } else {
      out += sgn(c[k]) < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (k == 0 || !unit) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace airyint
