#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "gchar/errors.hpp"
#include "gchar/rational.hpp"

namespace gchar {

/// Positive rational stored as prime -> signed exponent. Zero exponents are
/// never stored, so two factorizations of the same value compare equal.
class PrimeFactorization {
 public:
  using Map = std::map<unsigned, int>;

  PrimeFactorization() = default;
  explicit PrimeFactorization(Map exponents) : exponents_(std::move(exponents)) { prune(); }

  const Map& exponents() const { return exponents_; }
  int exponent(unsigned p) const {
    auto it = exponents_.find(p);
    return it == exponents_.end() ? 0 : it->second;
  }

  PrimeFactorization& operator*=(const PrimeFactorization& o) {
    for (const auto& [p, e] : o.exponents_) add(p, e);
    return *this;
  }
  PrimeFactorization& operator/=(const PrimeFactorization& o) {
    for (const auto& [p, e] : o.exponents_) add(p, -e);
    return *this;
  }
  friend PrimeFactorization operator*(PrimeFactorization a, const PrimeFactorization& b) {
    return a *= b;
  }
  friend PrimeFactorization operator/(PrimeFactorization a, const PrimeFactorization& b) {
    return a /= b;
  }

  /// Multiply by a positive machine integer.
  PrimeFactorization& mul_int(unsigned long long n) {
    if (n == 0) throw DomainError("PrimeFactorization cannot represent zero");
    for (unsigned long long p = 2; p * p <= n; ++p) {
      while (n % p == 0) {
        add(static_cast<unsigned>(p), 1);
        n /= p;
      }
    }
    if (n > 1) add(static_cast<unsigned>(n), 1);
    return *this;
  }

  BigRational to_rational() const {
    BigInt num = 1, den = 1;
    for (const auto& [p, e] : exponents_) {
      BigInt pe = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e < 0 ? -e : e));
      if (e > 0) {
        num *= pe;
      } else {
        den *= pe;
      }
    }
    return BigRational(num, den);
  }

  friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;

 private:
  void add(unsigned p, int e) {
    if (e == 0) return;
    int& slot = exponents_[p];
    slot += e;
    if (slot == 0) exponents_.erase(p);
  }
  void prune() {
    std::erase_if(exponents_, [](const auto& kv) { return kv.second == 0; });
  }

  Map exponents_;
};

namespace detail {

// Factorizations of n!, grown on demand. Readers share the lock; growth is
// serialized. Entries are never modified once published.
class FactorialTable {
 public:
  static FactorialTable& instance() {
    static FactorialTable table;
    return table;
  }

  PrimeFactorization get(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (n < table_.size()) return table_[n];
    }
    std::unique_lock lock(mutex_);
    while (table_.size() <= n) {
      PrimeFactorization next = table_.back();
      next.mul_int(table_.size());
      table_.push_back(std::move(next));
    }
    return table_[n];
  }

 private:
  FactorialTable() : table_(1) {}
  std::shared_mutex mutex_;
  std::vector<PrimeFactorization> table_;
};

}  // namespace detail

/// n! as a prime factorization; exponent of p is the Legendre sum
/// floor(n/p) + floor(n/p^2) + ...
inline PrimeFactorization factorial_factored(int n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  return detail::FactorialTable::instance().get(static_cast<unsigned>(n));
}

inline BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace gchar
