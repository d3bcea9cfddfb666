#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "gchar/errors.hpp"
#include "gchar/factorization.hpp"
#include "gchar/gegenbauer.hpp"
#include "gchar/half_int.hpp"
#include "gchar/integrals.hpp"
#include "gchar/pi_rational.hpp"
#include "gchar/polynomial.hpp"
#include "gchar/sqrt_rational.hpp"
#include "gchar/wigner.hpp"

namespace gchar {

/// Generalized character chi_k^j as the function
///   sqrt(prefactor_radicand) * sin^k(omega/2) * poly(cos(omega/2)).
struct CharacterPoly {
  HalfInt j;
  int k = 0;
  BigRational prefactor_radicand{0};
  PolyRational poly;
  int sin_power = 0;

  double operator()(double omega) const {
    const double half = 0.5 * omega;
    return std::sqrt(to_double(prefactor_radicand)) * std::pow(std::sin(half), sin_power) *
           poly.evaluate(std::cos(half));
  }

  friend bool operator==(const CharacterPoly&, const CharacterPoly&) = default;
};

namespace detail {

inline void check_character_args(HalfInt j, int k, const char* who) {
  if (j.twice() < 0) throw DomainError(std::string(who) + ": j must be >= 0");
  if (k < 0 || k > j.twice()) {
    throw DomainError(std::string(who) + ": need 0 <= k <= 2j (j=" + j.to_string() +
                      ", k=" + std::to_string(k) + ")");
  }
}

/// (2j+1) (2j-k)! / (2j+k+1)!
inline BigRational character_prefactor(HalfInt j, int k) {
  PrimeFactorization f = factorial_factored(j.twice() - k) / factorial_factored(j.twice() + k + 1);
  f.mul_int(static_cast<unsigned long long>(j.twice() + 1));
  return f.to_rational();
}

}  // namespace detail

/// Character of the spin-j irreducible representation at rotation angle
/// omega: sin((2j+1) omega/2) / sin(omega/2), i.e. sum_m exp(-i m omega).
inline double character(HalfInt j, double omega) {
  const double s = std::sin(0.5 * omega);
  if (std::fabs(s) < 1e-6) {
    // Near the removable singularities use the finite sum directly.
    double sum = 0.0;
    for (int tm = -j.twice(); tm <= j.twice(); tm += 2) sum += std::cos(0.5 * tm * omega);
    return sum;
  }
  return std::sin(0.5 * (j.twice() + 1) * omega) / s;
}

/// chi_k^j(omega) = i^k sum_m exp(-i m omega) <j m k 0 | j m>, evaluated in
/// floating point from the exact coefficients. The imaginary part must
/// cancel; a residual above 1e-12 (1 + |value|) throws std::logic_error.
inline double gen_character_via_cg(HalfInt j, int k, double omega) {
  detail::check_character_args(j, k, "gen_character_via_cg");
  const HalfInt kk = HalfInt::from_int(k), zero;
  std::complex<double> sum = 0.0;
  for (int tm = -j.twice(); tm <= j.twice(); tm += 2) {
    const HalfInt m = HalfInt::from_twice(tm);
    const double c = clebsch_gordan(j, m, kk, zero, j, m).to_double();
    sum += c * std::polar(1.0, -m.to_double() * omega);
  }
  static constexpr std::complex<double> kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<double> value = kIPowers[k % 4] * sum;
  if (std::fabs(value.imag()) > 1e-12 * (1.0 + std::fabs(value.real()))) {
    throw std::logic_error("gen_character_via_cg: imaginary residual " + std::to_string(value.imag()));
  }
  return value.real();
}

/// chi_k^j = (2k)!! sqrt((2j+1)(2j-k)!/(2j+k+1)!) sin^k(omega/2)
///           C_{2j-k}^(k+1)(cos(omega/2)), with (2k)!! = 2^k k!.
inline CharacterPoly gen_character_via_gegenbauer(HalfInt j, int k) {
  detail::check_character_args(j, k, "gen_character_via_gegenbauer");
  const BigRational double_fact = BigRational(BigInt(1) << k) * BigRational(factorial(k));
  return {j, k, detail::character_prefactor(j, k),
          gegenbauer_poly(j.twice() - k, k + 1) * double_fact, k};
}

/// chi_k^j from its definition: the k-th derivative of chi^j with respect to
/// x = cos(omega/2), where chi^j = C_{2j}^(1)(x) (Chebyshev of the second kind).
inline CharacterPoly gen_character_via_derivative(HalfInt j, int k) {
  detail::check_character_args(j, k, "gen_character_via_derivative");
  PolyRational p = gegenbauer_poly(j.twice(), 1);
  for (int i = 0; i < k; ++i) p = poly_derivative(p);
  return {j, k, detail::character_prefactor(j, k), std::move(p), k};
}

/// Integral over [0, 2pi] of chi_k^j chi_k^j' sin^2(omega/2), exactly.
///
/// With x = cos(omega/2) the integral becomes
///   2 sqrt(pref_j pref_j') * int poly_j poly_j' (1-x^2)^(k+1/2) dx.
inline PiRational gen_char_orthogonality_exact(HalfInt j, HalfInt jprime, int k) {
  const CharacterPoly a = gen_character_via_gegenbauer(j, k);
  const CharacterPoly b = gen_character_via_gegenbauer(jprime, k);
  const PiRational integral = weighted_poly_integral(a.poly * b.poly, k);
  if (integral.coefficient == 0) return {};
  const auto root = try_sqrt_to_rational(SqrtRational(1, a.prefactor_radicand * b.prefactor_radicand));
  if (!root) {
    throw DomainError("gen_char_orthogonality_exact: irrational prefactor product for j=" + j.to_string() +
                      ", j'=" + jprime.to_string());
  }
  return integral * (2 * *root);
}

}  // namespace gchar
