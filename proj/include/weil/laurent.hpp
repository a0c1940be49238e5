#pragma once

#include <map>
#include <string>
#include <utility>

#include "weil/matrix.hpp"
#include "weil/rational.hpp"

namespace weil {

// Element of Q[x][s, s^-1]: polynomial in x, Laurent polynomial in s.
class LaurentBivar {
 public:
  LaurentBivar() = default;
  LaurentBivar(int c) { *this = LaurentBivar(Rational(c)); }  // NOLINT(runtime/explicit)
  LaurentBivar(const Rational& c);                            // NOLINT(runtime/explicit)

  static LaurentBivar monomial(int xdeg, int sdeg, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int xdeg, int sdeg) const;

  Rational eval(const Rational& x, const Rational& s) const;

  friend LaurentBivar operator+(const LaurentBivar& a, const LaurentBivar& b);
  friend LaurentBivar operator-(const LaurentBivar& a, const LaurentBivar& b);
  friend LaurentBivar operator-(const LaurentBivar& a);
  friend LaurentBivar operator*(const LaurentBivar& a, const LaurentBivar& b);
  friend bool operator==(const LaurentBivar& a, const LaurentBivar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentBivar& a, const LaurentBivar& b) { return !(a == b); }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentBivar& p) {
    return os << p.str();
  }

 private:
  void prune();
  // (x degree >= 0, s degree) -> coefficient
  std::map<std::pair<int, int>, Rational> terms_;
};

using LMat = Matrix<LaurentBivar>;

LMat to_lmat(const QMat& m);

}  // namespace weil
