#pragma once

#include <iosfwd>
#include <string>

#include "weil/rational.hpp"

namespace weil {

// Element of Q(i).
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(int n) : re_(n) {}  // NOLINT: implicit by design
  GaussRational(const Rational& re) : re_(re) {}
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussRational conj() const { return GaussRational(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }  // |z|^2

  GaussRational operator-() const { return GaussRational(-re_, -im_); }
  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    const Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = re;
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    if (o.is_zero()) throw DimensionError("division by zero Gaussian rational");
    const Rational n = o.norm();
    return *this *= GaussRational(o.re_ / n, -o.im_ / n);
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  // i^e for any integer e.
  static GaussRational i_pow(long e);

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const GaussRational& z);

 private:
  Rational re_, im_;
};

inline GaussRational GaussRational::i_pow(long e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return GaussRational(1);
    case 1: return i();
    case 2: return GaussRational(-1);
    default: return -i();
  }
}

inline std::string GaussRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string s = re_.is_zero() ? "" : re_.str();
  if (im_ == Rational(1)) s += s.empty() ? "i" : "+i";
  else if (im_ == Rational(-1)) s += "-i";
  else s += (im_.sign() > 0 && !s.empty() ? "+" : "") + im_.str() + "i";
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.str(); }

}  // namespace weil
