#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "weil/lattice.hpp"

using namespace weil;
using testsupport::Lcg;
using testsupport::qmat;

namespace {
const QMat kHyperbolic = qmat({{0, 1}, {1, 0}});
const QMat kSymplectic = qmat({{0, 1}, {-1, 0}});
}  // namespace

TEST_CASE("lattice construction validates its invariants by name") {
  CHECK_NOTHROW(PolarizedLattice(2, kHyperbolic));
  CHECK_NOTHROW(PolarizedLattice(1, kSymplectic));

  auto invariant_of = [](int weight, const QMat& g) -> std::string {
    try {
      PolarizedLattice l(weight, g);
      return "";
    } catch (const ValidationError& e) {
      return e.invariant();
    }
  };
  CHECK(invariant_of(2, kSymplectic) == "gram parity");
  CHECK(invariant_of(1, kHyperbolic) == "gram parity");
  CHECK(invariant_of(2, qmat({{1, 2}, {2, 4}})) == "nondegenerate");
  QMat half(1, 1);
  half(0, 0) = Rational(1, 2);
  CHECK(invariant_of(2, half) == "integral gram");
  CHECK(invariant_of(2, QMat(0, 0)) == "positive rank");
  CHECK(invariant_of(2, QMat(2, 3)) == "positive rank");
}

TEST_CASE("pairing values and parity symmetry") {
  const PolarizedLattice hyp(2, kHyperbolic);
  CHECK(hyp.pair(QVec{Rational(1), Rational(1)}, QVec{Rational(1), Rational(1)}) == Rational(2));
  CHECK(hyp.pair(QVec{Rational(3), Rational(-2)}, QVec{Rational(0), Rational(0)}) == Rational(0));

  const PolarizedLattice sym(1, kSymplectic);
  const QVec e1{Rational(1), Rational(0)}, e2{Rational(0), Rational(1)};
  CHECK(sym.pair(e1, e2) == Rational(1));
  CHECK(sym.pair(e2, e1) == Rational(-1));

  Lcg rng(7);
  for (int it = 0; it < 50; ++it) {
    const QVec v = rng.ivec(2), w = rng.ivec(2);
    CHECK(hyp.pair(v, w) == hyp.pair(w, v));
    CHECK(sym.pair(v, w) == -sym.pair(w, v));
  }
  CHECK_THROWS_AS(hyp.pair(QVec{Rational(1)}, e1), DimensionError);
}

TEST_CASE("complex pairing extends bilinearly") {
  const PolarizedLattice hyp(2, kHyperbolic);
  const GVec u{GaussRational::i(), GaussRational(1)};
  const GVec w{GaussRational(1), GaussRational::i()};
  // u^T G w = i*i + 1*1 = 0
  CHECK(hyp.pair(u, w) == GaussRational(0));
  // u^T G conj(w) = i*(-i) + 1*1 = 2
  GVec wc{w[0].conj(), w[1].conj()};
  CHECK(hyp.pair(u, wc) == GaussRational(2));
}

TEST_CASE("signature on frozen fixtures") {
  CHECK(signature_of(QMat::identity(3)) == Signature{3, 0});
  CHECK(signature_of(qmat({{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}})) == Signature{1, 2});
  // char poly x^2 - 1: one root each sign
  CHECK(signature_of(kHyperbolic) == Signature{1, 1});
  CHECK(signature_of(qmat({{0, 0, 1}, {0, -1, 0}, {1, 0, 0}})) == Signature{1, 2});
  CHECK(signature_of(qmat({{2, 1}, {1, 2}})) == Signature{2, 0});
  CHECK_THROWS_AS(signature_of(qmat({{1, 0}, {0, 0}})), ValidationError);
  CHECK_THROWS_AS(signature_of(kSymplectic), DimensionError);
  CHECK(PolarizedLattice(2, kHyperbolic).signature() == Signature{1, 1});
  CHECK_THROWS_AS(PolarizedLattice(1, kSymplectic).signature(), DimensionError);
}

TEST_CASE("signature is a congruence invariant") {
  const std::vector<QMat> unimodular = {
      qmat({{1, 1}, {0, 1}}),
      qmat({{1, 0}, {3, 1}}),
      qmat({{2, 1}, {1, 1}}),
      qmat({{0, 1}, {-1, 2}}),
  };
  const std::vector<QMat> forms = {kHyperbolic, QMat::identity(2), qmat({{2, 1}, {1, -3}})};
  for (const auto& g : forms) {
    const Signature want = signature_of(g);
    for (const auto& b : unimodular)
      CHECK(signature_of(b.transpose() * g * b) == want);
  }

  Lcg rng(11);
  const QMat g3 = qmat({{0, 0, 1}, {0, -1, 0}, {1, 0, 0}});
  for (int it = 0; it < 20; ++it) {
    QMat b = QMat::identity(3);
    // random product of elementary integer shears stays unimodular
    for (int s = 0; s < 4; ++s) {
      QMat e = QMat::identity(3);
      int i = int(rng.pick(0, 2)), j = int(rng.pick(0, 2));
      if (i != j) e(i, j) = Rational(rng.pick(-2, 2));
      b = b * e;
    }
    CHECK(signature_of(b.transpose() * g3 * b) == Signature{1, 2});
  }
}

TEST_CASE("isometry predicate and its closure properties") {
  const PolarizedLattice hyp(2, kHyperbolic);
  const QMat swap = qmat({{0, 1}, {1, 0}});
  CHECK(is_isometry(hyp, QMat::identity(2)));
  CHECK(is_isometry(hyp, swap));
  CHECK(is_isometry(hyp, -QMat::identity(2)));
  CHECK_FALSE(is_isometry(PolarizedLattice(2, QMat::identity(2)), qmat({{1, 1}, {0, 1}})));

  // hyperbolic isometries: diag(u, 1/u) not integral unless u = ±1; closure
  // checks run over the finite subgroup {±I, ±swap}.
  const std::vector<QMat> group = {QMat::identity(2), -QMat::identity(2), swap, -swap};
  for (const auto& a : group)
    for (const auto& b : group) {
      CHECK(is_isometry(hyp, a * b));
      CHECK(is_isometry(hyp, inverse(a)));
    }
  CHECK_THROWS_AS(is_isometry(hyp, QMat::identity(3)), DimensionError);
}
