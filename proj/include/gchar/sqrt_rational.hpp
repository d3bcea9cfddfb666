#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "gchar/errors.hpp"
#include "gchar/rational.hpp"

namespace gchar {

/// Exact real number sign * sqrt(radicand) with a rational radicand.
/// Closed under multiplication; holds every Clebsch-Gordan coefficient and
/// 3j symbol.
class SqrtRational {
 public:
  SqrtRational() = default;

  SqrtRational(int sign, BigRational radicand) : sign_(sign), radicand_(std::move(radicand)) {
    if (radicand_ < 0) throw DomainError("SqrtRational radicand must be non-negative");
    if (sign_ < -1 || sign_ > 1) throw DomainError("SqrtRational sign must be -1, 0 or +1");
    if (radicand_ == 0 || sign_ == 0) {
      sign_ = 0;
      radicand_ = 0;
    }
  }

  /// The rational value r itself, as sign(r) * sqrt(r^2).
  static SqrtRational from_rational(const BigRational& r) {
    return SqrtRational(gchar::sign(r), r * r);
  }

  int sign() const { return sign_; }
  const BigRational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  /// Square of the value, always rational.
  BigRational squared() const { return radicand_; }

  SqrtRational operator-() const { return SqrtRational(-sign_, radicand_); }

  double to_double() const { return sign_ * std::sqrt(gchar::to_double(radicand_)); }

  friend bool operator==(const SqrtRational&, const SqrtRational&) = default;

 private:
  int sign_ = 0;
  BigRational radicand_{0};
};

inline SqrtRational sqrt_mul(const SqrtRational& a, const SqrtRational& b) {
  return SqrtRational(a.sign() * b.sign(), a.radicand() * b.radicand());
}

inline SqrtRational sqrt_div(const SqrtRational& a, const SqrtRational& b) {
  if (b.is_zero()) throw DomainError("division by zero SqrtRational");
  return SqrtRational(a.sign() * b.sign(), a.radicand() / b.radicand());
}

inline std::optional<BigRational> try_sqrt_to_rational(const SqrtRational& a) {
  if (a.is_zero()) return BigRational(0);
  auto root = exact_sqrt(a.radicand());
  if (!root) return std::nullopt;
  return a.sign() < 0 ? BigRational(-*root) : *root;
}

/// The value as an exact rational; throws NotAPerfectSquare if irrational.
inline BigRational sqrt_to_rational(const SqrtRational& a) {
  auto r = try_sqrt_to_rational(a);
  if (!r) throw NotAPerfectSquare("sqrt(" + to_string(a.radicand()) + ") is irrational");
  return *r;
}

/// "1", "-2/3", "sqrt(2/5)", "-sqrt(3)", "0".
inline std::string to_string(const SqrtRational& a) {
  if (auto r = try_sqrt_to_rational(a)) return to_string(*r);
  return std::string(a.sign() < 0 ? "-" : "") + "sqrt(" + to_string(a.radicand()) + ")";
}

}  // namespace gchar
