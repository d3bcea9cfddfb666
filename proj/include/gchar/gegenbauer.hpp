#pragma once

#include <array>
#include <optional>
#include <string>

#include "gchar/errors.hpp"
#include "gchar/factorization.hpp"
#include "gchar/pi_rational.hpp"
#include "gchar/polynomial.hpp"
#include "gchar/rational.hpp"

namespace gchar {

/// Gegenbauer polynomial C_n^(alpha) from the three-term recurrence
///   n C_n = 2(n+alpha-1) x C_{n-1} - (n+2 alpha-2) C_{n-2}.
inline PolyRational gegenbauer_poly(int n, const BigRational& alpha) {
  if (n < 0) throw DomainError("gegenbauer_poly: negative degree");
  if (alpha <= 0) throw DomainError("gegenbauer_poly: alpha must be positive, got " + to_string(alpha));
  PolyRational prev = PolyRational::constant(1);
  if (n == 0) return prev;
  PolyRational cur = PolyRational::monomial(2 * alpha, 1);
  for (int m = 2; m <= n; ++m) {
    PolyRational next = cur.shifted() * (2 * (m + alpha - 1) / m) - prev * ((m + 2 * alpha - 2) / m);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline PolyRational gegenbauer_poly(int n, int alpha) { return gegenbauer_poly(n, BigRational(alpha)); }

/// Rising factorial (a)_t.
inline BigRational pochhammer(const BigRational& a, int t) {
  BigRational r = 1;
  for (int i = 0; i < t; ++i) r *= a + i;
  return r;
}

namespace detail {

inline std::optional<int> nonpositive_integer(const BigRational& a) {
  if (denominator(a) != 1 || a > 0) return std::nullopt;
  return static_cast<int>(-numerator(a));
}

}  // namespace detail

/// Terminating 4F3(a1..a4; b1..b3; 1), summed exactly up to the first upper
/// parameter that is a non-positive integer.
inline BigRational hyp4f3_terminating(const std::array<BigRational, 4>& upper,
                                      const std::array<BigRational, 3>& lower) {
  std::optional<int> last;
  for (const auto& a : upper) {
    if (auto n = detail::nonpositive_integer(a); n && (!last || *n < *last)) last = n;
  }
  if (!last) throw DomainError("hyp4f3_terminating: no upper parameter is a non-positive integer");
  for (const auto& b : lower) {
    // (b)_t vanishes for t > -b when b is a non-positive integer.
    if (auto m = detail::nonpositive_integer(b); m && *m < *last) {
      throw DomainError("hyp4f3_terminating: lower parameter " + to_string(b) +
                        " hits a pole before the series terminates");
    }
  }
  BigRational term = 1, sum = 1;
  for (int t = 0; t < *last; ++t) {
    BigRational num = 1, den = t + 1;
    for (const auto& a : upper) num *= a + t;
    for (const auto& b : lower) den *= b + t;
    term *= num / den;
    sum += term;
  }
  return sum;
}

inline BigRational hyp4f3_terminating(const BigRational& a1, const BigRational& a2,
                                      const BigRational& a3, const BigRational& a4,
                                      const BigRational& b1, const BigRational& b2,
                                      const BigRational& b3) {
  return hyp4f3_terminating({a1, a2, a3, a4}, {b1, b2, b3});
}

namespace detail {

inline void check_norm_args(int n, int alpha, const char* who) {
  if (n < 0) throw DomainError(std::string(who) + ": n must be >= 0");
  if (alpha < 1) throw DomainError(std::string(who) + ": alpha must be an integer >= 1");
}

inline BigRational pow2(int e) {
  BigInt p = BigInt(1) << (e < 0 ? -e : e);
  return e < 0 ? BigRational(BigInt(1), p) : BigRational(p);
}

}  // namespace detail

/// Squared norm of C_n^(alpha) under the weight (1-x^2)^(alpha-1/2):
///   pi 2^(1-2 alpha) Gamma(n+2 alpha) / (n! (n+alpha) Gamma(alpha)^2).
inline PiRational gegenbauer_norm_orthogonality(int n, int alpha) {
  detail::check_norm_args(n, alpha, "gegenbauer_norm_orthogonality");
  const BigInt ga = factorial(alpha - 1);
  BigRational c = detail::pow2(1 - 2 * alpha) * BigRational(factorial(n + 2 * alpha - 1));
  c /= BigRational(factorial(n) * (n + alpha) * ga * ga);
  return PiRational(c);
}

/// Integral of [C_n^(alpha)]^2 (1-x^2)^(alpha+mu-1/2) over [-1, 1] through
/// the closed form with a terminating 4F3(-n, 2alpha+n, 1/2, -mu;
/// alpha+1/2, alpha-mu, 1; 1). Gamma ratios are reduced to Pochhammer
/// symbols and factorials. Gamma(alpha-mu) has a pole for alpha <= mu, which
/// is reported as DomainError.
inline PiRational gegenbauer_norm_general(int n, int alpha, int mu) {
  detail::check_norm_args(n, alpha, "gegenbauer_norm_general");
  if (mu < 0) throw DomainError("gegenbauer_norm_general: mu must be >= 0");
  if (alpha <= mu) {
    throw DomainError("gegenbauer_norm_general: Gamma(alpha-mu) pole for alpha=" + std::to_string(alpha) +
                      ", mu=" + std::to_string(mu));
  }
  const BigRational half = make_rational(1, 2);
  BigRational c = BigRational(factorial(2 * alpha + n - 1)) / BigRational(factorial(alpha + mu + n - 1));
  c *= pochhammer(alpha + half, mu);            // Gamma(alpha+mu+1/2) / Gamma(alpha+1/2)
  c *= pochhammer(BigRational(alpha - mu), n);  // Gamma(alpha-mu+n) / Gamma(alpha-mu)
  c /= detail::pow2(2 * alpha - 1) * (alpha + mu + n) * BigRational(factorial(n) * factorial(alpha - 1));
  c *= hyp4f3_terminating(BigRational(-n), BigRational(2 * alpha + n), half, BigRational(-mu),
                          alpha + half, BigRational(alpha - mu), BigRational(1));
  return PiRational(c);
}

/// The mu = 1 case of gegenbauer_norm_general in closed form:
///   pi Gamma(2a+n) [(a-1)(a+1/2) + n(a+n/2)]
///   / (2^(2a-1) (a+n-1)(a+n)(a+n+1) n! Gamma(a)^2).
/// At (alpha, n) = (1, 0) this is 0/0 (true value 3pi/8) and throws
/// DegenerateCase.
inline PiRational gegenbauer_norm_mu1(int n, int alpha) {
  detail::check_norm_args(n, alpha, "gegenbauer_norm_mu1");
  if (alpha + n - 1 == 0) {
    throw DegenerateCase("gegenbauer_norm_mu1: removable 0/0 at alpha=1, n=0 (true value 3*pi/8)");
  }
  const BigRational a(alpha);
  const BigRational bracket = (a - 1) * (a + make_rational(1, 2)) + n * (a + make_rational(n, 2));
  const BigInt ga = factorial(alpha - 1);
  BigRational c = BigRational(factorial(2 * alpha + n - 1)) * bracket;
  c /= detail::pow2(2 * alpha - 1) * BigRational(BigInt(alpha + n - 1) * (alpha + n) * (alpha + n + 1)) *
       BigRational(factorial(n) * ga * ga);
  return PiRational(c);
}

}  // namespace gchar
