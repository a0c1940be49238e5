#include "weil/laurent.hpp"

#include <sstream>

#include "weil/error.hpp"

namespace weil {

LaurentBivar::LaurentBivar(const Rational& c) {
  if (!c.is_zero()) terms_[{0, 0}] = c;
}

LaurentBivar LaurentBivar::monomial(int xdeg, int sdeg, const Rational& c) {
  if (xdeg < 0) throw DimensionError("negative x degree");
  LaurentBivar p;
  if (!c.is_zero()) p.terms_[{xdeg, sdeg}] = c;
  return p;
}

Rational LaurentBivar::coeff(int xdeg, int sdeg) const {
  auto it = terms_.find({xdeg, sdeg});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentBivar::eval(const Rational& x, const Rational& s) const {
  Rational out(0);
  for (const auto& [key, c] : terms_) {
    if (key.second != 0 && s.is_zero()) throw DimensionError("evaluation at s = 0");
    out = out + c * x.pow(key.first) * s.pow(key.second);
  }
  return out;
}

void LaurentBivar::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

LaurentBivar operator+(const LaurentBivar& a, const LaurentBivar& b) {
  LaurentBivar out = a;
  for (const auto& [key, c] : b.terms_) out.terms_[key] = out.terms_[key] + c;
  out.prune();
  return out;
}

LaurentBivar operator-(const LaurentBivar& a, const LaurentBivar& b) {
  LaurentBivar out = a;
  for (const auto& [key, c] : b.terms_) out.terms_[key] = out.terms_[key] - c;
  out.prune();
  return out;
}

LaurentBivar operator-(const LaurentBivar& a) { return LaurentBivar(0) - a; }

LaurentBivar operator*(const LaurentBivar& a, const LaurentBivar& b) {
  LaurentBivar out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      const std::pair<int, int> key{ka.first + kb.first, ka.second + kb.second};
      out.terms_[key] = out.terms_[key] + ca * cb;
    }
  out.prune();
  return out;
}

std::string LaurentBivar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    os << (first ? "" : " + ") << c.str();
    if (key.first != 0) os << "*x^" << key.first;
    if (key.second != 0) os << "*s^" << key.second;
    first = false;
  }
  return os.str();
}

LMat to_lmat(const QMat& m) {
  LMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = LaurentBivar(m(i, j));
  return out;
}

}  // namespace weil
