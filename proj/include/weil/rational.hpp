#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "weil/error.hpp"

namespace weil {

using Int = mpz_class;

// Arbitrary-precision rational, always in canonical form: gcd(num, den) = 1,
// den > 0.  Backed by GMP; the wrapper pins canonicalization and the "p/q"
// string format used by the I/O layer.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
  Rational(long n) : v_(static_cast<long>(n)) {}
  Rational(long long n) { v_ = make_int(n); }
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den);
  Rational(long num, long den);
  static Rational from_mpq(const mpq_class& q) {
    Rational r;
    r.v_ = q;
    r.v_.canonicalize();
    return r;
  }

  static Rational parse(const std::string& text);  // "p", "p/q", optional sign

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return from_mpq(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return v_ < 0 ? -*this : *this; }
  Rational inv() const;
  Rational pow(long e) const;  // e may be negative (then *this != 0)

  Int floor() const;  // largest integer <= value
  Int ceil() const;   // smallest integer >= value

  std::string str() const;  // "p" or "p/q", den always positive
  double approx() const { return v_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  static Int make_int(long long n);
  mpq_class v_;
};

// Largest non-negative integer t with t*t <= r; requires r >= 0.
Int floor_sqrt(const Rational& r);

// Integer range {m : (m - c)^2 <= r}, empty when r < 0.
struct IntRange {
  Int lo, hi;
  bool empty;
};
IntRange int_range_quadratic(const Rational& c, const Rational& r);

// Conversion guarded against silent truncation.
std::int64_t to_int64(const Int& z);

}  // namespace weil
