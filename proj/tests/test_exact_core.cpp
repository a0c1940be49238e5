#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weil/gauss.hpp"
#include "weil/laurent.hpp"
#include "weil/linalg.hpp"
#include "weil/matrix.hpp"
#include "weil/rational.hpp"

using namespace weil;

TEST_CASE("rational arithmetic and canonical form") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(-6, -4).str() == "3/2");
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK((Rational(3, 7) * Rational(7, 3)) == Rational(1));
  CHECK((Rational(1) / Rational(4)).str() == "1/4");
  CHECK(Rational(5).is_integer());
  CHECK_FALSE(Rational(5, 3).is_integer());
  CHECK(Rational(-3, 2).sign() == -1);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DimensionError);
}

TEST_CASE("rational parse accepts p and p/q only") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("+3/6") == Rational(1, 2));
  CHECK(Rational::parse("22/7").str() == "22/7");
  CHECK_THROWS_AS(Rational::parse(""), SchemaError);
  CHECK_THROWS_AS(Rational::parse("1.5"), SchemaError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), SchemaError);
  CHECK_THROWS_AS(Rational::parse("1/0"), SchemaError);
  CHECK_THROWS_AS(Rational::parse("a"), SchemaError);
  CHECK_THROWS_AS(Rational::parse("1/"), SchemaError);
  CHECK_THROWS_AS(Rational::parse("/2"), SchemaError);
}

TEST_CASE("rational pow, floor, ceil") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(6).floor() == 6);
  CHECK(Rational(6).ceil() == 6);
}

TEST_CASE("floor_sqrt on integers and fractions") {
  CHECK(floor_sqrt(Rational(0)) == 0);
  CHECK(floor_sqrt(Rational(1)) == 1);
  CHECK(floor_sqrt(Rational(3)) == 1);
  CHECK(floor_sqrt(Rational(4)) == 2);
  CHECK(floor_sqrt(Rational(99)) == 9);
  CHECK(floor_sqrt(Rational(100)) == 10);
  CHECK(floor_sqrt(Rational(1, 4)) == 0);
  CHECK(floor_sqrt(Rational(9, 4)) == 1);
  CHECK(floor_sqrt(Rational(17, 4)) == 2);
  Int big("100000000000000000000");  // 10^20
  CHECK(floor_sqrt(Rational(big)) == Int("10000000000"));
  CHECK(floor_sqrt(Rational(big - 1)) == Int("9999999999"));
}

static bool brute_range_matches(const Rational& c, const Rational& r) {
  IntRange got = int_range_quadratic(c, r);
  Int lo(0), hi(0);
  bool any = false;
  for (long m = -30; m <= 30; ++m) {
    const Rational d = Rational(m) - c;
    if (d * d <= r) {
      if (!any) lo = m;
      hi = m;
      any = true;
    }
  }
  if (!any) return got.empty;
  return !got.empty && got.lo == lo && got.hi == hi;
}

TEST_CASE("int_range_quadratic agrees with brute force") {
  CHECK(brute_range_matches(Rational(0), Rational(25)));
  CHECK(brute_range_matches(Rational(1, 2), Rational(1, 10)));
  CHECK(brute_range_matches(Rational(1, 2), Rational(1, 4)));
  CHECK(brute_range_matches(Rational(-7, 3), Rational(4)));
  CHECK(brute_range_matches(Rational(3), Rational(0)));
  CHECK(brute_range_matches(Rational(1, 2), Rational(0)));
  CHECK(brute_range_matches(Rational(-13, 7), Rational(100, 9)));
  CHECK(brute_range_matches(Rational(22, 7), Rational(2)));
  for (long p = -8; p <= 8; ++p)
    for (long q = 1; q <= 4; ++q)
      for (long rr = 0; rr <= 12; ++rr)
        CHECK(brute_range_matches(Rational(p, q), Rational(rr, 3)));
  CHECK(int_range_quadratic(Rational(0), Rational(-1)).empty);
}

TEST_CASE("gaussian rational field operations") {
  const GaussRational i = GaussRational::i();
  CHECK(i * i == GaussRational(-1));
  CHECK((GaussRational(1, 2) * GaussRational(3, -1)).str() == "5+5i");
  CHECK(GaussRational(3, 4).norm() == Rational(25));
  CHECK(GaussRational(3, 4).conj() == GaussRational(3, -4));
  const GaussRational z(Rational(1, 2), Rational(-3, 2));
  CHECK(z / z == GaussRational(1));
  CHECK((GaussRational(1) / i) == -i);
  CHECK(GaussRational::i_pow(0) == GaussRational(1));
  CHECK(GaussRational::i_pow(1) == i);
  CHECK(GaussRational::i_pow(2) == GaussRational(-1));
  CHECK(GaussRational::i_pow(3) == -i);
  CHECK(GaussRational::i_pow(-1) == -i);
  CHECK(GaussRational::i_pow(-2) == GaussRational(-1));
  CHECK(GaussRational::i_pow(6) == GaussRational(-1));
  CHECK_THROWS_AS(GaussRational(1) / GaussRational(0), DimensionError);
}

TEST_CASE("matrix product against schoolbook oracle") {
  const QMat a = QMat::from_rows({{Rational(1), Rational(2, 3), Rational(-1)},
                                  {Rational(0), Rational(5), Rational(1, 7)}});
  const QMat b = QMat::from_rows({{Rational(2), Rational(0)},
                                  {Rational(-1, 3), Rational(4)},
                                  {Rational(1), Rational(1, 2)}});
  QMat expect(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Rational s(0);
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      expect(i, j) = s;
    }
  CHECK(a * b == expect);
  CHECK((a * b)(0, 0) == Rational(2) - Rational(2, 9) - Rational(1));
  CHECK(a.transpose().transpose() == a);
  CHECK(QMat::identity(3) * b == b);
  const QVec v{Rational(1), Rational(0), Rational(2)};
  CHECK(a.apply(v) == QVec{Rational(-1), Rational(2, 7)});
}

TEST_CASE("solve_linear covers all three outcomes") {
  const QMat a = QMat::from_rows({{Rational(2), Rational(1)}, {Rational(1), Rational(3)}});
  const auto sol = solve_linear(a, {Rational(5), Rational(10)});
  REQUIRE(sol.status == SolveStatus::Unique);
  CHECK(sol.x == QVec{Rational(1), Rational(3)});

  const QMat sing = QMat::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
  CHECK(solve_linear(sing, {Rational(1), Rational(3)}).status == SolveStatus::Inconsistent);
  CHECK(solve_linear(sing, {Rational(1), Rational(2)}).status == SolveStatus::Underdetermined);
}

TEST_CASE("rank, kernel, inverse, determinant") {
  const QMat a = QMat::from_rows({{Rational(1), Rational(2), Rational(3)},
                                  {Rational(2), Rational(4), Rational(6)},
                                  {Rational(1), Rational(0), Rational(1)}});
  CHECK(rank(a) == 2);
  const auto ker = kernel_basis(a);
  REQUIRE(ker.size() == 1);
  CHECK(vec_is_zero(a.apply(ker[0])));

  const QMat m = QMat::from_rows({{Rational(2), Rational(1), Rational(0)},
                                  {Rational(1), Rational(1), Rational(1)},
                                  {Rational(0), Rational(3), Rational(2)}});
  CHECK(m * inverse(m) == QMat::identity(3));
  CHECK(inverse(m) * m == QMat::identity(3));
  CHECK_THROWS_AS(inverse(a), DimensionError);

  CHECK(determinant(m) == Rational(2) * (Rational(2) - Rational(3)) -
                              Rational(1) * (Rational(2) - Rational(0)));
  CHECK(determinant(a) == Rational(0));
  const QMat p = QMat::from_rows({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
  CHECK(determinant(p) == Rational(-1));
}

TEST_CASE("ldl certifies positive definiteness") {
  const QMat g = QMat::from_rows({{Rational(2), Rational(1)}, {Rational(1), Rational(2)}});
  const auto ldl = ldl_decompose(g, "test");
  CHECK(ldl.l(1, 0) == Rational(1, 2));
  CHECK(ldl.d == QVec{Rational(2), Rational(3, 2)});
  QMat d(2, 2);
  d(0, 0) = ldl.d[0];
  d(1, 1) = ldl.d[1];
  CHECK(ldl.l * d * ldl.l.transpose() == g);

  CHECK(is_positive_definite(g));
  CHECK_FALSE(is_positive_definite(
      QMat::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(1)}})));
  try {
    ldl_decompose(QMat::from_rows({{Rational(0)}}), "unit");
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(e.invariant() == "positive definite");
    CHECK(e.where() == "unit");
  }
}

TEST_CASE("hermitian definiteness classification") {
  auto diag = [](const Rational& a, const Rational& b) {
    GMat m(2, 2);
    m(0, 0) = GaussRational(a);
    m(1, 1) = GaussRational(b);
    return m;
  };
  CHECK(hermitian_definiteness(diag(Rational(2), Rational(3))) == Definiteness::Positive);
  CHECK(hermitian_definiteness(diag(Rational(-1), Rational(-2))) == Definiteness::Negative);
  CHECK(hermitian_definiteness(diag(Rational(1), Rational(-1))) == Definiteness::Indefinite);

  GMat h(2, 2);
  h(0, 0) = GaussRational(2);
  h(0, 1) = GaussRational::i();
  h(1, 0) = -GaussRational::i();
  h(1, 1) = GaussRational(1);
  CHECK(hermitian_definiteness(h) == Definiteness::Positive);

  GMat z(2, 2);
  z(0, 1) = GaussRational(1);
  z(1, 0) = GaussRational(1);
  CHECK(hermitian_definiteness(z) == Definiteness::Indefinite);
}

TEST_CASE("nilpotent exponential matches the truncated series") {
  QMat n(3, 3);
  n(0, 1) = Rational(1);
  n(1, 2) = Rational(1);
  const QMat e = matrix_exp_nilpotent(n, Rational(2));
  CHECK(e == QMat::from_rows({{Rational(1), Rational(2), Rational(2)},
                              {Rational(0), Rational(1), Rational(2)},
                              {Rational(0), Rational(0), Rational(1)}}));
  CHECK(matrix_exp_nilpotent(n, Rational(2)) * matrix_exp_nilpotent(n, Rational(-2)) ==
        QMat::identity(3));
  CHECK(is_nilpotent(n));
  CHECK_FALSE(is_nilpotent(QMat::identity(2)));
  CHECK_THROWS_AS(matrix_exp_nilpotent(QMat::identity(2), Rational(1)), ValidationError);

  QMat big(4, 4);
  big(0, 1) = Rational(3);
  big(1, 2) = Rational(-1, 2);
  big(2, 3) = Rational(5);
  QMat series = QMat::identity(4), term = QMat::identity(4);
  for (int j = 1; j <= 3; ++j) {
    term = (term * big).scaled(Rational(1, j));
    series = series + term;
  }
  CHECK(matrix_exp_nilpotent(big, Rational(1)) == series);
}

TEST_CASE("span membership and intersection") {
  const QVec e1{Rational(1), Rational(0), Rational(0)};
  const QVec e2{Rational(0), Rational(1), Rational(0)};
  const QVec e3{Rational(0), Rational(0), Rational(1)};
  CHECK(in_span<Rational>({e1, e2}, {Rational(3), Rational(-4), Rational(0)}));
  CHECK_FALSE(in_span<Rational>({e1, e2}, e3));
  CHECK(in_span<Rational>({}, {Rational(0), Rational(0), Rational(0)}));
  CHECK_FALSE(in_span<Rational>({}, e1));

  const auto meet = span_intersection<Rational>({e1, e2}, {e2, e3}, 3);
  REQUIRE(meet.size() == 1);
  CHECK(span_equal<Rational>(meet, {e2}, 3));
  CHECK(span_intersection<Rational>({e1}, {e2}, 3).empty());

  const QVec d1{Rational(1), Rational(1), Rational(0)};
  const QVec d2{Rational(1), Rational(-1), Rational(0)};
  CHECK(span_equal<Rational>({d1, d2}, {e1, e2}, 3));
  CHECK_FALSE(span_equal<Rational>({d1}, {e1}, 3));
  CHECK(span_contained<Rational>({d1}, {e1, e2}, 3));
}

TEST_CASE("laurent ring in x and s") {
  const LaurentBivar x = LaurentBivar::monomial(1, 0, Rational(1));
  const LaurentBivar s = LaurentBivar::monomial(0, 1, Rational(1));
  const LaurentBivar sinv = LaurentBivar::monomial(0, -1, Rational(1));
  CHECK(s * sinv == LaurentBivar(1));
  CHECK((x + s) * (x - s) == x * x - s * s);
  CHECK((x + s) - (x + s) == LaurentBivar(0));
  CHECK(((x + s) * (x - s)).eval(Rational(2), Rational(3)) == Rational(-5));
  CHECK((x * sinv).eval(Rational(3), Rational(1, 2)) == Rational(6));
  CHECK(LaurentBivar(Rational(5, 3)).eval(Rational(9), Rational(7)) == Rational(5, 3));
  CHECK((x - x).is_zero());
  CHECK((x * s).coeff(1, 1) == Rational(1));
  CHECK((x * s).coeff(1, 0) == Rational(0));
  CHECK_THROWS_AS(sinv.eval(Rational(1), Rational(0)), DimensionError);
  CHECK_THROWS_AS(LaurentBivar::monomial(-1, 0, Rational(1)), DimensionError);

  LMat m(2, 2);
  m(0, 0) = x;
  m(0, 1) = s;
  m(1, 1) = LaurentBivar(1);
  const LMat sq = m * m;
  CHECK(sq(0, 0) == x * x);
  CHECK(sq(0, 1) == x * s + s);
}
