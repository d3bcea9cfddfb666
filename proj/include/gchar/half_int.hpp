#pragma once

#include <compare>
#include <cstdlib>
#include <string>

#include "gchar/errors.hpp"

namespace gchar {

/// Element of (1/2)Z, stored as twice its value so integer and half-integer
/// angular momenta share one exact representation.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// Value as an int; throws if the value is a half-integer.
  int to_int() const {
    if (!is_integer()) {
      throw DomainError("HalfInt " + to_string() + " is not an integer");
    }
    return twice_ / 2;
  }

  constexpr double to_double() const { return 0.5 * twice_; }

  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) {
  return h.twice() < 0 ? -h : h;
}

/// (-1)^h for an integer-valued HalfInt.
inline int phase(HalfInt h) {
  const int v = h.to_int();
  return (v % 2 == 0) ? 1 : -1;
}

inline int phase(int n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace gchar
