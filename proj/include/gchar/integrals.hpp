#pragma once

#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "gchar/errors.hpp"
#include "gchar/pi_rational.hpp"
#include "gchar/polynomial.hpp"
#include "gchar/rational.hpp"

namespace gchar {

/// Integral of x^p (1-x^2)^(q+1/2) over [-1, 1], exactly.
///
/// Zero for odd p. For even p the value is a Beta function, reached from
/// M(0,0) = pi/2 by the exact reductions
///   M(0,q) = M(0,q-1) (2q+1)/(2q+2),   M(p,q) = M(p-2,q) (p-1)/(p+2q+2).
inline PiRational moment_halfweight(int p, int q) {
  if (p < 0 || q < 0) throw DomainError("moment_halfweight needs p, q >= 0");
  if (p % 2 != 0) return {};
  BigRational c = make_rational(1, 2);
  for (int i = 1; i <= q; ++i) c *= make_rational(2 * i + 1, 2 * i + 2);
  for (int i = 2; i <= p; i += 2) c *= make_rational(i - 1, i + 2 * q + 2);
  return PiRational(c);
}

/// Integral of poly(x) (1-x^2)^(q+1/2) over [-1, 1], exactly.
inline PiRational weighted_poly_integral(const PolyRational& poly, int q) {
  if (q < 0) throw DomainError("weighted_poly_integral needs q >= 0");
  if (poly.is_zero()) return {};
  BigRational moment = moment_halfweight(0, q).coefficient;
  BigRational total = 0;
  const auto& c = poly.coeffs();
  for (std::size_t p = 0; p < c.size(); p += 2) {
    if (p > 0) moment *= make_rational(static_cast<long long>(p) - 1, static_cast<long long>(p) + 2 * q + 2);
    total += c[p] * moment;
  }
  return PiRational(total);
}

/// Integral of exp(-2 i d eta) sin^4(eta) over [0, pi]. Real for integer d,
/// from sin^4 = 3/8 - cos(2 eta)/2 + cos(4 eta)/8: only |d| <= 2 survive.
inline PiRational sin4_fourier(int d) {
  switch (std::abs(d)) {
    case 0:
      return PiRational(make_rational(3, 8));
    case 1:
      return PiRational(make_rational(-1, 4));
    case 2:
      return PiRational(make_rational(1, 16));
    default:
      return {};
  }
}

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int nodes_used = 0;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

namespace detail {

inline GaussLegendreRule build_gauss_legendre(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton on P_n from the Tricomi-style initial guess.
    long double z = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    long double dp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0L);
      const long double dz = p1 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-19L) break;
    }
    const long double w = 2.0L / ((1.0L - z * z) * dp * dp);
    rule.nodes[i] = static_cast<double>(-z);
    rule.nodes[n - 1 - i] = static_cast<double>(z);
    rule.weights[i] = rule.weights[n - 1 - i] = static_cast<double>(w);
  }
  return rule;
}

class GaussLegendreCache {
 public:
  static GaussLegendreCache& instance() {
    static GaussLegendreCache cache;
    return cache;
  }

  std::shared_ptr<const GaussLegendreRule> get(int n) {
    std::lock_guard lock(mutex_);
    auto& slot = rules_[n];
    if (!slot) slot = std::make_shared<const GaussLegendreRule>(build_gauss_legendre(n));
    return slot;
  }

 private:
  std::mutex mutex_;
  std::map<int, std::shared_ptr<const GaussLegendreRule>> rules_;
};

template <class F>
double apply_rule(const GaussLegendreRule& rule, F&& f, double a, double b) {
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

}  // namespace detail

inline std::shared_ptr<const GaussLegendreRule> gauss_legendre_rule(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs n >= 1");
  return detail::GaussLegendreCache::instance().get(n);
}

/// n-point Gauss-Legendre estimate of the integral of f over [a, b]; the
/// error estimate is the difference from the (n+8)-point value.
template <class F>
QuadratureResult quad_gauss(F&& f, double a, double b, int n) {
  if (!(a < b)) throw DomainError("quad_gauss needs a < b");
  if (n < 2) throw DomainError("quad_gauss needs n >= 2");
  const double coarse = detail::apply_rule(*gauss_legendre_rule(n), f, a, b);
  const double fine = detail::apply_rule(*gauss_legendre_rule(n + 8), f, a, b);
  return {coarse, std::fabs(fine - coarse), n};
}

}  // namespace gchar
