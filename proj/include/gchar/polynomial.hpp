#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gchar/rational.hpp"

namespace gchar {

/// Univariate polynomial with exact rational coefficients; coeffs()[i]
/// multiplies x^i. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients.
class PolyRational {
 public:
  PolyRational() = default;
  explicit PolyRational(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  PolyRational(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { trim(); }

  static PolyRational constant(const BigRational& c) { return PolyRational({c}); }
  static PolyRational monomial(const BigRational& c, std::size_t power) {
    std::vector<BigRational> v(power + 1, BigRational(0));
    v[power] = c;
    return PolyRational(std::move(v));
  }

  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  BigRational coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : BigRational(0);
  }

  PolyRational& operator+=(const PolyRational& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  PolyRational& operator-=(const PolyRational& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  PolyRational& operator*=(const BigRational& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  friend PolyRational operator+(PolyRational a, const PolyRational& b) { return a += b; }
  friend PolyRational operator-(PolyRational a, const PolyRational& b) { return a -= b; }
  friend PolyRational operator*(PolyRational a, const BigRational& c) { return a *= c; }
  friend PolyRational operator*(const BigRational& c, PolyRational a) { return a *= c; }

  friend PolyRational operator*(const PolyRational& a, const PolyRational& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[i + k] += a.coeffs_[i] * b.coeffs_[k];
    }
    return PolyRational(std::move(out));
  }

  /// Multiply by x.
  PolyRational shifted() const {
    if (is_zero()) return {};
    std::vector<BigRational> v;
    v.reserve(coeffs_.size() + 1);
    v.emplace_back(0);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return PolyRational(std::move(v));
  }

  BigRational operator()(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  double evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
  }

  friend bool operator==(const PolyRational&, const PolyRational&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigRational> coeffs_;
};

/// Formal derivative.
inline PolyRational poly_derivative(const PolyRational& p) {
  if (p.degree() < 1) return {};
  std::vector<BigRational> out;
  out.reserve(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) out.push_back(p.coeffs()[i] * static_cast<long long>(i));
  return PolyRational(std::move(out));
}

inline std::string to_string(const PolyRational& p) {
  if (p.is_zero()) return "[]";
  std::string s = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) s += ", ";
    s += to_string(p.coeffs()[i]);
  }
  return s + "]";
}

}  // namespace gchar
