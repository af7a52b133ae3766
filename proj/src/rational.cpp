#include "fet/rational.hpp"

namespace fet {

namespace {

using Int = Rational::Int;

Int iabs(Int v) { return v < 0 ? -v : v; }

Int gcd128(Int a, Int b) {
  a = iabs(a);
  b = iabs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string int128_to_string(Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

}  // namespace

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw InternalError("rational arithmetic overflow");
  }
  return out;
}

Rational::Rational(Int num, Int den) : num_(num), den_(den) {
  if (den_ == 0) throw BadParams("rational with zero denominator");
  normalize();
}

Rational Rational::dyadic(Int num, int k) {
  if (k < 0) throw BadParams("negative dyadic exponent");
  // Strip shared factors of two before forming 2^k.
  while (k > 0 && num != 0 && (num & 1) == 0) {
    num >>= 1;
    --k;
  }
  if (k >= 127) throw InternalError("dyadic exponent out of range");
  return Rational(num, Int(1) << k);
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = gcd128(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  Int g = gcd128(den_, o.den_);
  Int lhs = checked_mul(num_, o.den_ / g);
  Int rhs = checked_mul(o.num_, den_ / g);
  if (__builtin_add_overflow(lhs, rhs, &num_)) {
    throw InternalError("rational arithmetic overflow");
  }
  den_ = checked_mul(den_, o.den_ / g);
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  Int g1 = gcd128(num_, o.den_);
  Int g2 = gcd128(o.num_, den_);
  num_ = checked_mul(num_ / g1, o.num_ / g2);
  den_ = checked_mul(den_ / g2, o.den_ / g1);
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw BadParams("rational division by zero");
  return *this *= Rational(o.den_, o.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  Int lhs = checked_mul(a.num_, b.den_);
  Int rhs = checked_mul(b.num_, a.den_);
  return lhs < rhs;
}

double Rational::to_double() const {
  return static_cast<double>(static_cast<long double>(num_) /
                             static_cast<long double>(den_));
}

std::string Rational::to_string() const {
  if (den_ == 1) return int128_to_string(num_);
  return int128_to_string(num_) + "/" + int128_to_string(den_);
}

}  // namespace fet
