#pragma once

#include <numbers>
#include <string>

#include "gchar/rational.hpp"

namespace gchar {

/// Exact value coefficient * pi. Every integral in this library lands here.
struct PiRational {
  BigRational coefficient{0};

  PiRational() = default;
  explicit PiRational(BigRational c) : coefficient(std::move(c)) {}

  double to_double() const { return gchar::to_double(coefficient) * std::numbers::pi; }

  PiRational& operator+=(const PiRational& o) {
    coefficient += o.coefficient;
    return *this;
  }
  PiRational& operator-=(const PiRational& o) {
    coefficient -= o.coefficient;
    return *this;
  }
  PiRational& operator*=(const BigRational& c) {
    coefficient *= c;
    return *this;
  }
  friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
  friend PiRational operator-(PiRational a, const PiRational& b) { return a -= b; }
  friend PiRational operator*(PiRational a, const BigRational& c) { return a *= c; }
  friend PiRational operator*(const BigRational& c, PiRational a) { return a *= c; }
  PiRational operator-() const { return PiRational(-coefficient); }

  friend bool operator==(const PiRational&, const PiRational&) = default;
};

/// "3/8*pi", "-pi", "0".
inline std::string to_string(const PiRational& v) {
  if (v.coefficient == 0) return "0";
  if (v.coefficient == 1) return "pi";
  if (v.coefficient == -1) return "-pi";
  return to_string(v.coefficient) + "*pi";
}

}  // namespace gchar
