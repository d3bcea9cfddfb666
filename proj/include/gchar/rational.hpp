#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "gchar/errors.hpp"

namespace gchar {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational; always kept in lowest terms with a positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt denominator(const BigRational& r) {
  return boost::multiprecision::denominator(r);
}

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) return BigRational(-num, -den);
  return BigRational(num, den);
}

inline BigRational make_rational(long long num, long long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

inline int sign(const BigRational& r) {
  return r == 0 ? 0 : (r < 0 ? -1 : 1);
}

/// Canonical text form: "p/q", or "p" when the denominator is 1.
inline std::string to_string(const BigRational& r) {
  std::string s = numerator(r).str();
  const BigInt den = denominator(r);
  if (den != 1) s += "/" + den.str();
  return s;
}

/// Inverse of to_string. Accepts "p", "-p", "p/q"; throws DomainError on
/// malformed text or a zero denominator.
inline BigRational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (part.size() == start) throw DomainError("malformed rational: " + std::string(text));
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw DomainError("malformed rational: " + std::string(text));
      }
    }
    return BigInt(std::string(part));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

inline double to_double(const BigRational& r) {
  return r.convert_to<double>();
}

/// floor(sqrt(n)) for n >= 0, by Newton iteration on big integers.
inline BigInt isqrt(const BigInt& n) {
  if (n < 0) throw DomainError("isqrt of a negative integer");
  if (n < 2) return n;
  // Start above the root: 2^(ceil(bits/2)).
  const unsigned bits = boost::multiprecision::msb(n) + 1;
  BigInt x = BigInt(1) << ((bits + 1) / 2);
  while (true) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

/// Exact square root of a non-negative integer, if it is a perfect square.
inline std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = isqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

/// Exact square root of a non-negative rational in lowest terms.
inline std::optional<BigRational> exact_sqrt(const BigRational& q) {
  if (q < 0) return std::nullopt;
  auto num = exact_sqrt(numerator(q));
  if (!num) return std::nullopt;
  auto den = exact_sqrt(denominator(q));
  if (!den) return std::nullopt;
  return BigRational(*num, *den);
}

}  // namespace gchar
