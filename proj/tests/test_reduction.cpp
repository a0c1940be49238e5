#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>

#include "support.hpp"
#include "weil/linalg.hpp"
#include "weil/reduction.hpp"

using namespace weil;
using testsupport::qmat;

namespace {

OrderedBasis standard_basis(int n) {
  OrderedBasis b;
  for (int i = 0; i < n; ++i) {
    QVec v(n);
    v[i] = Rational(1);
    b.push_back(v);
  }
  return b;
}

QMat diag(const std::vector<long>& ds) {
  QMat m(int(ds.size()), int(ds.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = Rational(ds[std::size_t(i)]);
  return m;
}

std::string failing_invariant(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ValidationError& e) {
    return e.invariant();
  }
  return "(no error)";
}

Rational pair_under(const QMat& g, const QVec& v, const QVec& w) {
  const QVec gw = g.apply(w);
  Rational s;
  for (std::size_t k = 0; k < v.size(); ++k) s += v[k] * gw[k];
  return s;
}

// Exact Gram-Schmidt without normalization; output is pairwise g-orthogonal.
OrderedBasis orthogonalize(const QMat& g, const OrderedBasis& in) {
  OrderedBasis out;
  for (const auto& v : in) {
    QVec u = v;
    for (const auto& prev : out) {
      const Rational coef = pair_under(g, v, prev) / pair_under(g, prev, prev);
      u = vec_sub(u, vec_scale(prev, coef));
    }
    out.push_back(u);
  }
  return out;
}

}  // namespace

TEST_CASE("reduction condition fixtures") {
  ReductionParams unit;
  unit.c1 = {{2, Rational(1)}, {3, Rational(1)}};

  for (int n : {2, 3}) {
    ReductionParams p = unit;
    const auto report = is_t_reduced(QMat::identity(n), standard_basis(n), p);
    CHECK(report.reduced());
    CHECK(report.failures().empty());
  }

  {
    const auto report = is_t_reduced(diag({2, 1}), standard_basis(2), ReductionParams{});
    CHECK(!report.size_chain);
    CHECK(report.off_diagonal);
    CHECK(report.orthogonality_defect);
    CHECK(report.failures() == std::vector<std::string>{"size_chain"});
  }

  {
    QMat g = qmat({{4, 3}, {3, 4}});
    g = g.scaled(Rational(1, 4L));
    const auto report = is_t_reduced(g, standard_basis(2), ReductionParams{});
    CHECK(report.size_chain);
    CHECK(!report.off_diagonal);
    CHECK(!report.reduced());
  }

  {
    // Boundary: 2|<v1,v2>| = |v1|^2 and the determinant bound holds with equality.
    QMat g = qmat({{2, 1}, {1, 2}});
    g = g.scaled(Rational(1, 2L));
    CHECK(is_t_reduced(g, standard_basis(2), ReductionParams{}).reduced());
    ReductionParams tight;
    tight.c1 = {{2, Rational(1)}};
    const auto report = is_t_reduced(g, standard_basis(2), tight);
    CHECK(report.size_chain);
    CHECK(report.off_diagonal);
    CHECK(!report.orthogonality_defect);
    CHECK(report.failures() == std::vector<std::string>{"orthogonality_defect"});
  }
}

TEST_CASE("reduction precondition errors") {
  ReductionParams p;
  CHECK(failing_invariant([&] {
          ReductionParams bad = p;
          bad.t = Rational(0);
          is_t_reduced(QMat::identity(2), standard_basis(2), bad);
        }) == "positive threshold");
  CHECK(failing_invariant([&] {
          ReductionParams bad = p;
          bad.c1[3] = Rational(1, 2L);
          is_t_reduced(QMat::identity(2), standard_basis(2), bad);
        }) == "minkowski constant");
  CHECK(failing_invariant([&] {
          ReductionParams empty;
          empty.c1.clear();
          is_t_reduced(QMat::identity(2), standard_basis(2), empty);
        }) == "minkowski constant");
  CHECK(failing_invariant([&] { is_t_reduced(diag({1, -1}), standard_basis(2), p); }) ==
        "positive definite");
  CHECK(failing_invariant([&] { is_t_reduced(qmat({{1, 1}, {0, 1}}), standard_basis(2), p); }) ==
        "symmetric form");
  CHECK(failing_invariant([&] {
          OrderedBasis b = standard_basis(2);
          b.push_back(vec_add(b[0], b[1]));
          is_t_reduced(QMat::identity(2), b, p);
        }) == "ordered basis");
  CHECK(failing_invariant([&] { is_t_reduced(QMat::identity(2), {}, p); }) == "ordered basis");
  CHECK_THROWS_AS(is_t_reduced(QMat::identity(2), {QVec{Rational(1)}}, p), DimensionError);
}

TEST_CASE("siegel membership on the hyperbolic plane") {
  const PolarizedLattice l(2, qmat({{0, 1}, {1, 0}}));
  const WeilOperator swap =
      WeilOperator::from_matrix(l, qmat({{0, 1}, {1, 0}}), "siegel fixture");
  ReductionParams p;

  CHECK(siegel_membership(l, standard_basis(2), p, swap).reduced());

  OrderedBasis rescaled = standard_basis(2);
  rescaled[0] = vec_scale(rescaled[0], Rational(2));
  const auto report = siegel_membership(l, rescaled, p, swap);
  CHECK(!report.size_chain);
  CHECK(!report.reduced());
}

TEST_CASE("verdicts travel along integer isometries") {
  const PolarizedLattice l(2, qmat({{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}));
  const WeilOperator c =
      WeilOperator::from_matrix(l, diag({-1, -1, 1}), "equivariance fixture");
  const QMat gamma = qmat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  CHECK(gamma.transpose() * l.gram() * gamma == l.gram());

  testsupport::Lcg rng(59);
  ReductionParams p;
  p.t = Rational(3);
  int verdicts = 0;
  for (int it = 0; it < 40; ++it) {
    OrderedBasis b;
    for (int k = 0; k < 3; ++k) b.push_back(rng.ivec(3, 4));
    if (rank(columns_matrix(b, 3)) != 3) continue;
    OrderedBasis moved;
    for (const auto& v : b) moved.push_back(gamma.apply(v));
    const QMat c_moved = gamma * c.matrix() * inverse(gamma);
    const auto before = siegel_membership(l, b, p, c);
    const auto after = siegel_membership(
        l, moved, p, WeilOperator::from_matrix(l, c_moved, "moved operator"));
    CHECK(before.size_chain == after.size_chain);
    CHECK(before.off_diagonal == after.off_diagonal);
    CHECK(before.orthogonality_defect == after.orthogonality_defect);
    verdicts += before.reduced() ? 1 : 0;
  }
  CHECK(verdicts >= 0);
}

TEST_CASE("monotonicity in the threshold") {
  testsupport::Lcg rng(83);
  for (int it = 0; it < 30; ++it) {
    const int n = int(rng.pick(2, 4));
    QMat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = Rational(rng.pick(-2, 2));
    const QMat g = a.transpose() * a + QMat::identity(n).scaled(Rational(n));
    bool prev = false;
    for (long t : {1, 2, 4, 8, 64, 4096}) {
      ReductionParams p;
      p.t = Rational(t);
      const bool now = is_t_reduced(g, standard_basis(n), p).reduced();
      if (prev) CHECK(now);
      prev = now;
    }
  }
}

TEST_CASE("orthogonal insertion") {
  ReductionParams p;
  const auto sub_basis = [](int total, std::vector<int> idx) {
    OrderedBasis b;
    for (int i : idx) {
      QVec v(total);
      v[i] = Rational(1);
      b.push_back(v);
    }
    return b;
  };
  const auto unit = [](int total, int i) {
    QVec v(total);
    v[i] = Rational(1);
    return v;
  };

  CHECK(insert_orthogonal_vector(diag({1, 4, 9, 5}), sub_basis(4, {0, 1, 2}), unit(4, 3), p) == 2);
  CHECK(insert_orthogonal_vector(diag({2, 4, 9, 1}), sub_basis(4, {0, 1, 2}), unit(4, 3), p) == 0);
  CHECK(insert_orthogonal_vector(diag({1, 4, 9, 4}), sub_basis(4, {0, 1, 2}), unit(4, 3), p) == 1);
  CHECK(insert_orthogonal_vector(diag({1, 4, 9, 64}), sub_basis(4, {0, 1, 2}), unit(4, 3), p) == 3);

  CHECK(failing_invariant([&] {
          ReductionParams half;
          half.t = Rational(1, 2L);
          insert_orthogonal_vector(diag({1, 1}), sub_basis(2, {0}), unit(2, 1), half);
        }) == "insertion threshold");
  CHECK(failing_invariant([&] {
          insert_orthogonal_vector(diag({4, 1, 1}), sub_basis(3, {0, 1}), unit(3, 2), p);
        }) == "reduced basis");
  CHECK(failing_invariant([&] {
          QVec a(3);
          a[0] = a[2] = Rational(1);
          insert_orthogonal_vector(diag({1, 1, 1}), sub_basis(3, {0, 1}), a, p);
        }) == "orthogonal vector");
  CHECK(failing_invariant([&] {
          insert_orthogonal_vector(diag({1, 1, 1}), sub_basis(3, {0, 1}), QVec(3), p);
        }) == "nonzero vector");
}

TEST_CASE("insertion output re-passes the reduction predicate") {
  testsupport::Lcg rng(71);
  int planted = 0;
  for (int it = 0; it < 500; ++it) {
    const int n = int(rng.pick(2, 6));
    ReductionParams p;
    p.t = Rational(rng.pick(1, 3));

    QMat g(n, n);
    OrderedBasis pool;
    if (it % 2 == 0) {
      std::vector<long> ds;
      for (int i = 0; i < n; ++i) ds.push_back(rng.pick(1, 12));
      g = diag(ds);
      pool = standard_basis(n);
    } else {
      QMat a(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Rational(rng.pick(-2, 2));
      g = a.transpose() * a + QMat::identity(n).scaled(Rational(n));
      pool = orthogonalize(g, standard_basis(n));
    }
    std::sort(pool.begin(), pool.end(), [&](const QVec& x, const QVec& y) {
      return pair_under(g, x, x) < pair_under(g, y, y);
    });

    const std::size_t hold = std::size_t(rng.pick(0, n - 1));
    const QVec a = pool[hold];
    OrderedBasis basis;
    for (std::size_t k = 0; k < pool.size(); ++k)
      if (k != hold) basis.push_back(pool[k]);

    const int pos = insert_orthogonal_vector(g, basis, a, p);
    OrderedBasis extended(basis.begin(), basis.begin() + pos);
    extended.push_back(a);
    extended.insert(extended.end(), basis.begin() + pos, basis.end());
    CHECK(is_t_reduced(g, extended, p).reduced());
    planted += pos;
  }
  CHECK(planted > 0);
}
