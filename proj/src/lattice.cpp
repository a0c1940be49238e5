#include "weil/lattice.hpp"

namespace weil {

Signature signature_of(const QMat& symmetric) {
  if (!symmetric.is_square()) throw DimensionError("signature of non-square matrix");
  if (symmetric != symmetric.transpose())
    throw DimensionError("signature of non-symmetric matrix");
  const int n = symmetric.rows();
  QMat a = symmetric;
  Signature sig;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!a(i, i).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) {
      // All-zero diagonal: either the block vanishes (degenerate) or some
      // off-diagonal entry survives and a row+column fold makes a pivot.
      int fi = -1, fj = -1;
      for (int i = k; i < n && fi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (!a(i, j).is_zero()) {
            fi = i;
            fj = j;
            break;
          }
      if (fi < 0)
        throw ValidationError("nondegenerate", "signature",
                              "form vanishes on a " + std::to_string(n - k) +
                                  "-dimensional subspace");
      for (int j = k; j < n; ++j) a(fi, j) = a(fi, j) + a(fj, j);
      for (int i = k; i < n; ++i) a(i, fi) = a(i, fi) + a(i, fj);
      piv = fi;
    }
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(a(piv, j), a(k, j));
      for (int i = k; i < n; ++i) std::swap(a(i, piv), a(i, k));
    }
    const Rational d = a(k, k);
    (d.sign() > 0 ? sig.positive : sig.negative)++;
    // Row k stays untouched below, so the active block keeps its symmetry
    // without explicit mirroring.
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rational f = a(i, k) / d;
      for (int j = k + 1; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
    }
  }
  return sig;
}

PolarizedLattice::PolarizedLattice(int weight, QMat gram) : weight_(weight), gram_(std::move(gram)) {
  if (!gram_.is_square() || gram_.rows() < 1)
    throw ValidationError("positive rank", "PolarizedLattice",
                          "gram must be square of rank >= 1");
  const int n = gram_.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!gram_(i, j).is_integer())
        throw ValidationError("integral gram", "PolarizedLattice",
                              "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") = " + gram_(i, j).str());
  const bool even = weight_ % 2 == 0;
  const QMat gt = gram_.transpose();
  if (even ? gt != gram_ : gt != -gram_)
    throw ValidationError("gram parity", "PolarizedLattice",
                          even ? "even weight requires a symmetric gram"
                               : "odd weight requires an antisymmetric gram");
  if (determinant(gram_).is_zero())
    throw ValidationError("nondegenerate", "PolarizedLattice", "gram determinant is zero");
}

Rational PolarizedLattice::pair(const QVec& v, const QVec& w) const {
  if (int(v.size()) != rank() || int(w.size()) != rank())
    throw DimensionError("pair with wrong vector length");
  const QVec gw = gram_.apply(w);
  Rational acc(0);
  for (int i = 0; i < rank(); ++i) acc += v[i] * gw[i];
  return acc;
}

GaussRational PolarizedLattice::pair(const GVec& v, const GVec& w) const {
  if (int(v.size()) != rank() || int(w.size()) != rank())
    throw DimensionError("pair with wrong vector length");
  GaussRational acc;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) {
      if (gram_(i, j).is_zero()) continue;
      acc += GaussRational(gram_(i, j)) * v[i] * w[j];
    }
  return acc;
}

Signature PolarizedLattice::signature() const {
  if (!even_weight()) throw DimensionError("signature requires even weight");
  return signature_of(gram_);
}

bool is_isometry(const PolarizedLattice& l, const QMat& g) {
  if (!g.is_square() || g.rows() != l.rank())
    throw DimensionError("isometry candidate of wrong size");
  return g.transpose() * l.gram() * g == l.gram();
}

}  // namespace weil
