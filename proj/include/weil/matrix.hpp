#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "weil/error.hpp"
#include "weil/gauss.hpp"
#include "weil/rational.hpp"

namespace weil {

// Dense row-major matrix over an exact commutative ring T.  T() must be the
// additive identity and T(1) the multiplicative one.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix extent");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(int(rows.size()), int(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
      if (int(rows[i].size()) != m.cols_) throw DimensionError("ragged matrix rows");
      for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  // Column vectors laid side by side.
  static Matrix from_columns(const std::vector<std::vector<T>>& cols) {
    if (cols.empty()) return Matrix(0, 0);
    Matrix m(int(cols[0].size()), int(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
      if (int(cols[j].size()) != m.rows_) throw DimensionError("ragged matrix columns");
      for (int i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  std::vector<T> column(int j) const {
    std::vector<T> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<T> row(int i) const {
    std::vector<T> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  Matrix scaled(const T& s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = x * s;
    return m;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!(x == T())) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "+");
    Matrix m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = m.a_[k] + b.a_[k];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "-");
    Matrix m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = m.a_[k] - b.a_[k];
    return m;
  }
  friend Matrix operator-(const Matrix& a) { return a.scaled(T(-1)); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T()) continue;
        for (int j = 0; j < b.cols_; ++j) m(i, j) = m(i, j) + aik * b(k, j);
      }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (int(v.size()) != cols_) throw DimensionError("matrix-vector shape mismatch");
    std::vector<T> out(rows_);
    for (int i = 0; i < rows_; ++i) {
      T acc{};
      for (int j = 0; j < cols_; ++j) acc = acc + (*this)(i, j) * v[j];
      out[i] = acc;
    }
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
      os << (i ? "; " : "");
      for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
  }

 private:
  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError(std::string("matrix ") + op + " shape mismatch");
  }

  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using QMat = Matrix<Rational>;
using GMat = Matrix<GaussRational>;
using QVec = std::vector<Rational>;
using GVec = std::vector<GaussRational>;
using IVec = std::vector<std::int64_t>;

template <class T>
std::vector<T> vec_add(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum shape mismatch");
  std::vector<T> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

template <class T>
std::vector<T> vec_sub(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference shape mismatch");
  std::vector<T> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

template <class T>
std::vector<T> vec_scale(const std::vector<T>& a, const T& s) {
  std::vector<T> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] * s;
  return out;
}

template <class T>
bool vec_is_zero(const std::vector<T>& a) {
  for (const auto& x : a)
    if (!(x == T())) return false;
  return true;
}

inline QVec to_qvec(const IVec& v) {
  QVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = Rational(static_cast<long long>(v[k]));
  return out;
}

inline GVec to_gvec(const QVec& v) {
  GVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = GaussRational(v[k]);
  return out;
}

inline GMat to_gmat(const QMat& m) {
  GMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = GaussRational(m(i, j));
  return out;
}

}  // namespace weil
