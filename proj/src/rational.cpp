#include "weil/rational.hpp"

#include <limits>
#include <ostream>

namespace weil {

Int Rational::make_int(long long n) {
  if (n >= std::numeric_limits<long>::min() && n <= std::numeric_limits<long>::max())
    return Int(static_cast<long>(n));
  return Int(std::to_string(n));
}

Rational::Rational(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw DimensionError("rational with zero denominator");
  v_ = mpq_class(num) / mpq_class(den);
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DimensionError("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inv() const {
  if (is_zero()) throw DimensionError("inverse of zero rational");
  return Rational::from_mpq(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = e > 0 ? *this : inv();
  unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  mpq_class acc;
  mpz_pow_ui(acc.get_num_mpz_t(), base.v_.get_num_mpz_t(), k);
  mpz_pow_ui(acc.get_den_mpz_t(), base.v_.get_den_mpz_t(), k);
  acc.canonicalize();
  return Rational::from_mpq(acc);
}

Int Rational::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Int Rational::ceil() const {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw SchemaError("empty rational literal");
  const auto slash = text.find('/');
  auto check_digits = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto drop_plus = [](const std::string& part) {
    return part.size() > 1 && part[0] == '+' ? part.substr(1) : part;
  };
  if (slash == std::string::npos) {
    if (!check_digits(text, true)) throw SchemaError("bad rational literal '" + text + "'");
    return Rational(Int(drop_plus(text)));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!check_digits(num, true) || !check_digits(den, false))
    throw SchemaError("bad rational literal '" + text + "'");
  Int d(den);
  if (sgn(d) == 0) throw SchemaError("zero denominator in '" + text + "'");
  return Rational(Int(drop_plus(num)), d);
}

std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Int floor_sqrt(const Rational& r) {
  if (r.sign() < 0) throw DimensionError("floor_sqrt of negative rational");
  Int s;
  Int f = r.floor();
  mpz_sqrt(s.get_mpz_t(), f.get_mpz_t());
  // mpz_sqrt of floor(r) is within 1 of the true answer; fix up exactly.
  while (Rational(Int((s + 1) * (s + 1))) <= r) s += 1;
  while (s > 0 && Rational(Int(s * s)) > r) s -= 1;
  return s;
}

IntRange int_range_quadratic(const Rational& c, const Rational& r) {
  IntRange out{Int(0), Int(0), true};
  if (r.sign() < 0) return out;
  const Int root = floor_sqrt(r);
  // hi = max { m : (m - c)^2 <= r }, i.e. m <= c + sqrt(r).
  Int hi = c.floor() + root + 2;
  while (hi > c && Rational((Rational(hi) - c) * (Rational(hi) - c)) > r) hi -= 1;
  // lo by symmetry: m >= c - sqrt(r)  <=>  -m <= -c + sqrt(r).
  Int lo = c.ceil() - root - 2;
  while (Rational(lo) < c && (c - Rational(lo)) * (c - Rational(lo)) > r) lo += 1;
  if (lo > hi) return out;
  out.lo = lo;
  out.hi = hi;
  out.empty = false;
  return out;
}

std::int64_t to_int64(const Int& z) {
  if (!z.fits_slong_p()) throw DimensionError("integer does not fit in 64 bits: " + z.get_str());
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace weil
