#pragma once

#include <algorithm>
#include <string>

#include "gchar/errors.hpp"
#include "gchar/factorization.hpp"
#include "gchar/half_int.hpp"
#include "gchar/rational.hpp"
#include "gchar/sqrt_rational.hpp"

namespace gchar {

/// Arguments of a 3j symbol (j1 j2 j3; m1 m2 m3).
struct ThreeJArgs {
  HalfInt j1, j2, j3;
  HalfInt m1, m2, m3;

  friend bool operator==(const ThreeJArgs&, const ThreeJArgs&) = default;
};

/// |j1-j2| <= j3 <= j1+j2 with j1+j2+j3 an integer.
inline bool triangle_ok(HalfInt j1, HalfInt j2, HalfInt j3) {
  if ((j1 + j2 + j3).twice() % 2 != 0) return false;
  return abs(j1 - j2) <= j3 && j3 <= j1 + j2;
}

namespace detail {

inline void check_projection(HalfInt j, HalfInt m, const char* which) {
  if (j.twice() < 0) {
    throw DomainError(std::string(which) + ": negative angular momentum j=" + j.to_string());
  }
  if (abs(m) > j) {
    throw DomainError(std::string(which) + ": |m| > j (j=" + j.to_string() + ", m=" + m.to_string() + ")");
  }
  if (!(j - m).is_integer()) {
    throw DomainError(std::string(which) + ": j and m differ in parity (j=" + j.to_string() +
                      ", m=" + m.to_string() + ")");
  }
}

inline PrimeFactorization fact(HalfInt h) { return factorial_factored(h.to_int()); }

}  // namespace detail

/// <j1 m1 j2 m2 | j3 m3> in the Condon-Shortley phase convention, exact.
///
/// Racah single-sum form. The square-root prefactor
///   (2j3+1) D(j1 j2 j3) (j1+m1)! (j1-m1)! (j2+m2)! (j2-m2)! (j3+m3)! (j3-m3)!
/// is accumulated as a prime factorization; the alternating sum over t is
/// accumulated as a rational S, and the result is sign(S) sqrt(prefactor S^2).
inline SqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j3,
                                   HalfInt m3) {
  detail::check_projection(j1, m1, "clebsch_gordan");
  detail::check_projection(j2, m2, "clebsch_gordan");
  detail::check_projection(j3, m3, "clebsch_gordan");
  if (m1 + m2 != m3 || !triangle_ok(j1, j2, j3)) return {};

  using detail::fact;
  PrimeFactorization pref;
  pref.mul_int(static_cast<unsigned long long>(j3.twice() + 1));
  pref *= fact(j1 + j2 - j3);
  pref *= fact(j1 - j2 + j3);
  pref *= fact(j2 + j3 - j1);
  pref /= fact(j1 + j2 + j3 + HalfInt::from_int(1));
  pref *= fact(j1 + m1);
  pref *= fact(j1 - m1);
  pref *= fact(j2 + m2);
  pref *= fact(j2 - m2);
  pref *= fact(j3 + m3);
  pref *= fact(j3 - m3);

  const int a = (j1 + j2 - j3).to_int();
  const int b = (j1 - m1).to_int();
  const int c = (j2 + m2).to_int();
  const int d = (j3 - j2 + m1).to_int();
  const int e = (j3 - j1 - m2).to_int();
  const int t_min = std::max({0, -d, -e});
  const int t_max = std::min({a, b, c});

  BigRational sum = 0;
  for (int t = t_min; t <= t_max; ++t) {
    const BigInt den = factorial(t) * factorial(a - t) * factorial(b - t) * factorial(c - t) *
                       factorial(d + t) * factorial(e + t);
    sum += BigRational(BigInt(phase(t)), den);
  }
  if (sum == 0) return {};
  return SqrtRational(sign(sum), pref.to_rational() * sum * sum);
}

/// Wigner 3j symbol, related to the Clebsch-Gordan coefficient by
///   <j1 m1 j2 m2 | j3 m3> = (-1)^(j1-j2+m3) sqrt(2j3+1) (j1 j2 j3; m1 m2 -m3).
inline SqrtRational wigner_3j(const ThreeJArgs& s) {
  detail::check_projection(s.j1, s.m1, "wigner_3j");
  detail::check_projection(s.j2, s.m2, "wigner_3j");
  detail::check_projection(s.j3, s.m3, "wigner_3j");
  if ((s.m1 + s.m2 + s.m3).twice() != 0) return {};
  const SqrtRational cg = clebsch_gordan(s.j1, s.m1, s.j2, s.m2, s.j3, -s.m3);
  if (cg.is_zero()) return {};
  const int ph = phase(s.j1 - s.j2 - s.m3);
  return SqrtRational(ph * cg.sign(), cg.radicand() / (s.j3.twice() + 1));
}

/// Inverse of the 3j relation: the Clebsch-Gordan coefficient recovered from
/// the corresponding 3j symbol.
inline SqrtRational clebsch_gordan_from_3j(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                                           HalfInt j3, HalfInt m3) {
  detail::check_projection(j3, m3, "clebsch_gordan_from_3j");
  const SqrtRational w = wigner_3j({j1, j2, j3, m1, m2, -m3});
  if (w.is_zero()) return {};
  return SqrtRational(phase(j1 - j2 + m3) * w.sign(), w.radicand() * (j3.twice() + 1));
}

/// Columns reversed: (j3 j2 j1; m3 m2 m1).
inline ThreeJArgs reversed(const ThreeJArgs& s) {
  return {s.j3, s.j2, s.j1, s.m3, s.m2, s.m1};
}

/// (j3 j2 j1; m3 m2 m1) evaluated through the reversal symmetry: the value of
/// (j1 j2 j3; m1 m2 m3) times (-1)^(j1+j2+j3).
inline SqrtRational symmetry_3j_reverse(const ThreeJArgs& s) {
  const SqrtRational w = wigner_3j(s);
  if (w.is_zero()) return w;
  return SqrtRational(phase(s.j1 + s.j2 + s.j3) * w.sign(), w.radicand());
}

}  // namespace gchar
