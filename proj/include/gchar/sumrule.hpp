#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "gchar/errors.hpp"
#include "gchar/factorization.hpp"
#include "gchar/gegenbauer.hpp"
#include "gchar/half_int.hpp"
#include "gchar/integrals.hpp"
#include "gchar/pi_rational.hpp"
#include "gchar/rational.hpp"
#include "gchar/sqrt_rational.hpp"
#include "gchar/wigner.hpp"

namespace gchar {

enum class Form { CG, ThreeJ };
enum class Mode { Exact, Float };

inline std::string to_string(Form f) { return f == Form::CG ? "cg" : "3j"; }
inline std::string to_string(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

/// Absolute tolerance, scaled by max(1, |rhs|), for float-mode reports.
inline constexpr double kFloatTolerance = 1e-12;

/// Outcome of checking the sum rule for one (j, k, form).
///
/// In exact mode `lhs` holds the exact left-hand side and pass means
/// lhs == rhs. In float mode `lhs` is empty and pass compares `lhs_float`
/// against rhs within kFloatTolerance.
struct SumRuleReport {
  int two_j = 0;
  int k = 0;
  Form form = Form::CG;
  Mode mode = Mode::Exact;
  std::optional<BigRational> lhs;
  BigRational rhs{0};
  double lhs_float = 0.0;
  bool pass = false;
  long long term_count = 0;
  std::chrono::microseconds elapsed{0};
};

/// 1 / (Gamma(3+d) Gamma(3-d)): 1/4, 1/6, 1/24 for |d| = 0, 1, 2 and zero
/// beyond, where one reciprocal Gamma sits on a non-positive integer.
inline BigRational weight_exact(int d) {
  if (std::abs(d) >= 3) return 0;
  return BigRational(BigInt(1), factorial(2 + d) * factorial(2 - d));
}

namespace detail {

inline void check_sum_args(HalfInt j, int k, const char* who) {
  if (j.twice() < 0) throw DomainError(std::string(who) + ": j must be >= 0");
  if (k < 0) throw DomainError(std::string(who) + ": k must be >= 0");
}

/// Diagonal coefficients indexed by m = -j..j: <j m k 0 | j m> for the CG
/// form, (j k j; -m 0 m) for the 3j form.
inline std::vector<SqrtRational> diagonal_coefficients(HalfInt j, int k, Form form) {
  const HalfInt kk = HalfInt::from_int(k), zero;
  std::vector<SqrtRational> out;
  out.reserve(j.twice() + 1);
  for (int tm = -j.twice(); tm <= j.twice(); tm += 2) {
    const HalfInt m = HalfInt::from_twice(tm);
    if (k > j.twice()) {
      out.emplace_back();  // triangle fails; every coefficient vanishes
    } else if (form == Form::CG) {
      out.push_back(clebsch_gordan(j, m, kk, zero, j, m));
    } else {
      out.push_back(wigner_3j({j, kk, j, -m, zero, m}));
    }
  }
  return out;
}

inline BigRational rational_product(const SqrtRational& a, const SqrtRational& b, HalfInt j, int k) {
  auto r = try_sqrt_to_rational(sqrt_mul(a, b));
  if (!r) {
    throw IrrationalTerm("irrational coefficient product at j=" + j.to_string() + ", k=" + std::to_string(k));
  }
  return *r;
}

// Double sum over m (outer) and m' (inner), both ascending. The CG form
// carries the extra sign (-1)^(m'-m). With truncate_support, pairs with
// |m-m'| >= 3 (zero weight) are skipped without forming the product.
inline BigRational lhs_exact(HalfInt j, int k, Form form, bool truncate_support) {
  check_sum_args(j, k, "sum rule lhs");
  const auto c = diagonal_coefficients(j, k, form);
  const int n = static_cast<int>(c.size());
  BigRational sum = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int d = a - b;  // m - m'
      if (truncate_support && std::abs(d) >= 3) continue;
      const BigRational prod = rational_product(c[a], c[b], j, k);
      if (prod == 0) continue;
      BigRational w = weight_exact(d);
      if (form == Form::CG) w *= phase(d);
      sum += w * prod;
    }
  }
  return sum;
}

}  // namespace detail

/// Sum over m, m' of (-1)^(m'-m) w(m-m') <j m k 0|j m><j m' k 0|j m'>.
inline BigRational lhs_cg_exact(HalfInt j, int k, bool truncate_support = true) {
  return detail::lhs_exact(j, k, Form::CG, truncate_support);
}

/// Sum over m, m' of w(m-m') (j k j; -m 0 m)(j k j; -m' 0 m').
inline BigRational lhs_3j_exact(HalfInt j, int k, bool truncate_support = true) {
  return detail::lhs_exact(j, k, Form::ThreeJ, truncate_support);
}

/// [k(k+1) + 4j(j+1)] / (24 j(j+1)) when (j, k, j) is a triangle, else 0.
/// The expression is 0/0 at j = 0, which throws DegenerateCase.
inline BigRational rhs_cg(HalfInt j, int k) {
  detail::check_sum_args(j, k, "rhs_cg");
  if (j.twice() == 0) throw DegenerateCase("sum rule right-hand side is 0/0 at j = 0");
  if (!triangle_ok(j, HalfInt::from_int(k), j)) return 0;
  // With t = 2j: 4j(j+1) = t(t+2) and 24 j(j+1) = 6 t(t+2).
  const long long t = j.twice();
  return make_rational(static_cast<long long>(k) * (k + 1) + t * (t + 2), 6 * t * (t + 2));
}

inline BigRational rhs_3j(HalfInt j, int k) { return rhs_cg(j, k) / (j.twice() + 1); }

/// Floating-point evaluation of the same double sum. The sinc-type weight
/// sin((m'-m)pi) / ((m'-m)pi (1-(m'-m)^2)(4-(m'-m)^2)) is taken at its
/// integer-argument limits, which are the Gamma-form weights.
inline double lhs_float(HalfInt j, int k, Form form) {
  detail::check_sum_args(j, k, "lhs_float");
  const auto c = detail::diagonal_coefficients(j, k, form);
  const int n = static_cast<int>(c.size());
  double sum = 0.0;
  for (int a = 0; a < n; ++a) {
    const double ca = c[a].to_double();
    for (int b = std::max(0, a - 2); b <= std::min(n - 1, a + 2); ++b) {
      double w = to_double(weight_exact(a - b));
      if (form == Form::CG) w *= phase(a - b);
      sum += w * ca * c[b].to_double();
    }
  }
  return sum;
}

inline BigRational rhs(HalfInt j, int k, Form form) {
  return form == Form::CG ? rhs_cg(j, k) : rhs_3j(j, k);
}

struct VerifyOptions {
  Mode mode = Mode::Exact;
  bool truncate_support = true;
};

inline SumRuleReport verify(HalfInt j, int k, Form form, VerifyOptions opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  SumRuleReport r;
  r.two_j = j.twice();
  r.k = k;
  r.form = form;
  r.mode = opts.mode;
  r.rhs = rhs(j, k, form);
  r.term_count = static_cast<long long>(j.twice() + 1) * (j.twice() + 1);
  if (opts.mode == Mode::Exact) {
    r.lhs = detail::lhs_exact(j, k, form, opts.truncate_support);
    r.lhs_float = to_double(*r.lhs);
    r.pass = (*r.lhs == r.rhs);
  } else {
    r.lhs_float = lhs_float(j, k, form);
    const double target = to_double(r.rhs);
    r.pass = std::fabs(r.lhs_float - target) <= kFloatTolerance * std::max(1.0, std::fabs(target));
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

struct SweepCell {
  int two_j = 0;
  int k = 0;
  Form form = Form::CG;
};

/// Cells ordered by (two_j, k, form) for 2j in [two_j_min, two_j_max] and
/// k in [0, 2j + k_extra].
inline std::vector<SweepCell> sweep_cells(int two_j_min, int two_j_max, int k_extra,
                                          const std::vector<Form>& forms) {
  std::vector<SweepCell> cells;
  for (int tj = two_j_min; tj <= two_j_max; ++tj) {
    for (int k = 0; k <= tj + k_extra; ++k) {
      for (Form f : forms) cells.push_back({tj, k, f});
    }
  }
  return cells;
}

/// Verify every cell using up to `threads` workers (0 = hardware
/// concurrency). Output order always matches the input order.
inline std::vector<SumRuleReport> run_cells(const std::vector<SweepCell>& cells, VerifyOptions opts = {},
                                            unsigned threads = 1) {
  std::vector<SumRuleReport> out(cells.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, cells.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    try {
      for (std::size_t i; !failed && (i = next.fetch_add(1)) < cells.size();) {
        const auto& c = cells[i];
        out[i] = verify(HalfInt::from_twice(c.two_j), c.k, c.form, opts);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

/// Both forms for every 2j in 1..two_j_max and k in 0..2j+k_extra.
inline std::vector<SumRuleReport> sweep(int two_j_max, int k_extra, VerifyOptions opts = {},
                                        unsigned threads = 1) {
  if (two_j_max < 1) throw DomainError("sweep: two_j_max must be >= 1");
  if (k_extra < 0) throw DomainError("sweep: k_extra must be >= 0");
  return run_cells(sweep_cells(1, two_j_max, k_extra, {Form::CG, Form::ThreeJ}), opts, threads);
}

/// Two sides of the chain that produces the sum rule.
///
/// Fourier side: sum over m, m' of <jmk0|jm><jm'k0|jm'> times the integral of
/// exp(-2i(m-m')eta) sin^4(eta) over [0, pi].
inline PiRational chain_fourier_side(HalfInt j, int k) {
  const auto c = detail::diagonal_coefficients(j, k, Form::CG);
  const int n = static_cast<int>(c.size());
  PiRational total;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      total += sin4_fourier(a - b) * detail::rational_product(c[a], c[b], j, k);
    }
  }
  return total;
}

/// Gegenbauer side: (2^k k!)^2 (2j+1)(2j-k)!/(2j+k+1)! times the integral of
/// [C_{2j-k}^(k+1)(cos eta)]^2 sin^(2k+4)(eta) over [0, pi], the latter
/// being the mu = 1 weighted norm with alpha = k+1, n = 2j-k.
inline PiRational chain_gegenbauer_side(HalfInt j, int k, const PiRational& specialized_integral) {
  const BigInt dbl = (BigInt(1) << k) * factorial(k);
  const BigRational pref = BigRational(BigInt(j.twice() + 1) * factorial(j.twice() - k),
                                       factorial(j.twice() + k + 1));
  return specialized_integral * (BigRational(dbl * dbl) * pref);
}

/// Closed form of the specialized integral of [C_{2j-k}^(k+1)(cos eta)]^2
/// sin^(2k+4)(eta) over [0, pi]:
///   (pi/16) (2j+k+1)! / ((2j-k)! (2j+1) j(j+1)) [k(k+1)+4j(j+1)] / (2^k k!)^2.
inline PiRational specialized_integral_closed(HalfInt j, int k) {
  if (j.twice() == 0) throw DegenerateCase("specialized integral closed form is 0/0 at j = 0");
  const long long t = j.twice();
  const BigInt dbl = (BigInt(1) << k) * factorial(k);
  // j(j+1) = t(t+2)/4, 4j(j+1) = t(t+2)
  BigRational c = BigRational(factorial(t + k + 1), factorial(t - k) * (t + 1));
  c *= make_rational(4, t * (t + 2));
  c *= BigRational(BigInt(static_cast<long long>(k) * (k + 1) + t * (t + 2)), dbl * dbl);
  c /= 16;
  return PiRational(c);
}

}  // namespace gchar
