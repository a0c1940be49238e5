#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weil/matrix.hpp"

namespace weil {

// --- Exact elimination over a field T (Rational or GaussRational). ---

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

template <class T>
struct SolveResult {
  SolveStatus status;
  std::vector<T> x;  // populated only when status == Unique
};

namespace detail {

// Row-reduce [A | tail] in place, returning pivot columns of A.
template <class T>
std::vector<int> rref(Matrix<T>& m, int a_cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a_cols && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!(m(i, c) == T())) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const T inv = T(1) / m(r, c);
    for (int j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == T()) continue;
      const T f = m(i, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <class T>
int rank(Matrix<T> m) {
  return int(detail::rref(m, m.cols()).size());
}

template <class T>
SolveResult<T> solve_linear(const Matrix<T>& a, const std::vector<T>& b) {
  if (int(b.size()) != a.rows()) throw DimensionError("solve_linear shape mismatch");
  Matrix<T> m(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    m(i, a.cols()) = b[i];
  }
  const auto pivots = detail::rref(m, a.cols());
  for (int i = int(pivots.size()); i < m.rows(); ++i)
    if (!(m(i, a.cols()) == T())) return {SolveStatus::Inconsistent, {}};
  if (int(pivots.size()) < a.cols()) return {SolveStatus::Underdetermined, {}};
  std::vector<T> x(a.cols());
  for (int i = 0; i < int(pivots.size()); ++i) x[pivots[i]] = m(i, a.cols());
  return {SolveStatus::Unique, x};
}

template <class T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> m) {
  const int n = m.cols();
  const auto pivots = detail::rref(m, n);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<T> v(n);
    v[c] = T(1);
    for (int i = 0; i < int(pivots.size()); ++i) v[pivots[i]] = T() - m(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionError("inverse of non-square matrix");
  const int n = a.rows();
  Matrix<T> m(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = T(1);
  }
  if (int(detail::rref(m, n).size()) != n) throw DimensionError("inverse of singular matrix");
  Matrix<T> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = m(i, n + j);
  return out;
}

// --- Span utilities (columns span subspaces). ---

template <class T>
Matrix<T> columns_matrix(const std::vector<std::vector<T>>& vecs, int dim) {
  Matrix<T> m(dim, int(vecs.size()));
  for (int j = 0; j < int(vecs.size()); ++j) {
    if (int(vecs[j].size()) != dim) throw DimensionError("span vector of wrong dimension");
    for (int i = 0; i < dim; ++i) m(i, j) = vecs[j][i];
  }
  return m;
}

template <class T>
bool in_span(const std::vector<std::vector<T>>& span, const std::vector<T>& v) {
  if (span.empty()) return vec_is_zero(v);
  const int dim = int(v.size());
  Matrix<T> a = columns_matrix(span, dim);
  Matrix<T> ext(dim, a.cols() + 1);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < a.cols(); ++j) ext(i, j) = a(i, j);
    ext(i, a.cols()) = v[i];
  }
  return rank(a) == rank(ext);
}

template <class T>
bool span_contained(const std::vector<std::vector<T>>& inner,
                    const std::vector<std::vector<T>>& outer, int dim) {
  Matrix<T> b = columns_matrix(outer, dim);
  Matrix<T> ext(dim, b.cols() + int(inner.size()));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < b.cols(); ++j) ext(i, j) = b(i, j);
    for (int j = 0; j < int(inner.size()); ++j) ext(i, b.cols() + j) = inner[j][i];
  }
  return rank(b) == rank(ext);
}

template <class T>
bool span_equal(const std::vector<std::vector<T>>& a, const std::vector<std::vector<T>>& b,
                int dim) {
  return span_contained(a, b, dim) && span_contained(b, a, dim);
}

// Basis of span(a) ∩ span(b).
template <class T>
std::vector<std::vector<T>> span_intersection(const std::vector<std::vector<T>>& a,
                                              const std::vector<std::vector<T>>& b, int dim) {
  if (a.empty() || b.empty()) return {};
  Matrix<T> m(dim, int(a.size() + b.size()));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < int(a.size()); ++j) m(i, j) = a[j][i];
    for (int j = 0; j < int(b.size()); ++j) m(i, int(a.size()) + j) = T() - b[j][i];
  }
  std::vector<std::vector<T>> out;
  for (const auto& k : kernel_basis(m)) {
    std::vector<T> v(dim);
    for (int j = 0; j < int(a.size()); ++j)
      for (int i = 0; i < dim; ++i) v[i] = v[i] + a[j][i] * k[j];
    if (vec_is_zero(v)) continue;
    out.push_back(std::move(v));
    if (!out.empty()) {
      Matrix<T> chk = columns_matrix(out, dim);
      if (rank(chk) < int(out.size())) out.pop_back();
    }
  }
  return out;
}

// --- Nilpotent exponentials. ---

template <class T>
Matrix<T> matrix_exp_nilpotent(const Matrix<T>& m) {
  if (!m.is_square()) throw DimensionError("exp of non-square matrix");
  const int n = m.rows();
  Matrix<T> term = Matrix<T>::identity(n);
  Matrix<T> sum = Matrix<T>::identity(n);
  for (int j = 1; j <= n; ++j) {
    term = (term * m).scaled(T(Rational(1, long(j))));
    if (term.is_zero()) return sum;
    sum = sum + term;
  }
  throw ValidationError("nilpotent", "matrix_exp_nilpotent", "matrix power " +
                        std::to_string(n) + " does not vanish");
}

QMat matrix_exp_nilpotent(const QMat& n, const Rational& scale);

bool is_nilpotent(const QMat& m);

// --- Symmetric / Hermitian pivoting. ---

struct LdlResult {
  QMat l;   // unit lower triangular
  QVec d;   // positive pivots
};

// Exact LDL^T of a symmetric positive definite rational matrix; the pivots
// certify definiteness.  Throws ValidationError("positive definite", where).
LdlResult ldl_decompose(const QMat& g, const std::string& where);

bool is_positive_definite(const QMat& g);

enum class Definiteness { Positive, Negative, Indefinite };

// Classifies a Hermitian matrix (caller guarantees hermitianity) by exact
// elimination pivots; semidefinite and singular both land on Indefinite.
Definiteness hermitian_definiteness(const GMat& h);

Rational determinant(QMat m);

}  // namespace weil
