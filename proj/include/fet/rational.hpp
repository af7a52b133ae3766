#pragma once

#include <cstdint>
#include <string>

#include "fet/common.hpp"

namespace fet {

// Exact rational arithmetic on 128-bit integers. All quantities the toolkit
// compares exactly (influences, average sensitivities, partition measures,
// l2 approximation errors) are dyadic or small rationals, so 128 bits with
// eager gcd reduction is ample; overflow throws InternalError instead of
// wrapping.
class Rational {
 public:
  using Int = __int128;

  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  // p / 2^k without intermediate blowup.
  static Rational dyadic(Int num, int k);

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  double to_double() const;
  std::string to_string() const;  // "num/den", or "num" when integral

 private:
  void normalize();
  Int num_;
  Int den_;  // > 0, gcd(|num|, den) == 1
};

// Checked 128-bit product; the arithmetic here never legitimately overflows.
Rational::Int checked_mul(Rational::Int a, Rational::Int b);

}  // namespace fet
