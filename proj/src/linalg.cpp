#include "weil/linalg.hpp"

namespace weil {

QMat matrix_exp_nilpotent(const QMat& n, const Rational& scale) {
  return matrix_exp_nilpotent(n.scaled(scale));
}

bool is_nilpotent(const QMat& m) {
  if (!m.is_square()) throw DimensionError("nilpotency test on non-square matrix");
  QMat p = m;
  for (int j = 1; j < m.rows(); ++j) {
    if (p.is_zero()) return true;
    p = p * m;
  }
  return p.is_zero();
}

LdlResult ldl_decompose(const QMat& g, const std::string& where) {
  if (!g.is_square()) throw DimensionError("ldl_decompose of non-square matrix");
  const int n = g.rows();
  QMat l = QMat::identity(n);
  QVec d(n);
  QMat work = g;
  for (int k = 0; k < n; ++k) {
    d[k] = work(k, k);
    if (d[k].sign() <= 0)
      throw ValidationError("positive definite", where,
                            "pivot " + std::to_string(k) + " is " + d[k].str());
    for (int i = k + 1; i < n; ++i) l(i, k) = work(i, k) / d[k];
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j <= i; ++j) {
        work(i, j) = work(i, j) - l(i, k) * d[k] * l(j, k);
        work(j, i) = work(i, j);
      }
  }
  return {l, d};
}

bool is_positive_definite(const QMat& g) {
  try {
    ldl_decompose(g, "is_positive_definite");
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

Definiteness hermitian_definiteness(const GMat& h) {
  if (!h.is_square()) throw DimensionError("definiteness of non-square matrix");
  const int n = h.rows();
  GMat work = h;
  int positive = 0, negative = 0;
  for (int k = 0; k < n; ++k) {
    const GaussRational p = work(k, k);
    if (!p.is_real() || p.re().is_zero()) return Definiteness::Indefinite;
    (p.re().sign() > 0 ? positive : negative)++;
    for (int i = k + 1; i < n; ++i) {
      const GaussRational f = work(i, k) / p;
      for (int j = k + 1; j < n; ++j) work(i, j) = work(i, j) - f * work(k, j);
    }
  }
  if (positive == n) return Definiteness::Positive;
  if (negative == n) return Definiteness::Negative;
  return Definiteness::Indefinite;
}

Rational determinant(QMat m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  const int n = m.rows();
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    for (int i = c + 1; i < n; ++i) {
      const Rational f = m(i, c) / m(c, c);
      for (int j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

}  // namespace weil
