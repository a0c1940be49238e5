#include "weil/hodge.hpp"

#include <algorithm>
#include <set>

namespace weil {

namespace {

std::string piece_name(int p, int q) {
  return "piece (" + std::to_string(p) + "," + std::to_string(q) + ")";
}

GVec conj_vec(const GVec& v) {
  GVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].conj();
  return out;
}

}  // namespace

HodgeDecomposition::HodgeDecomposition(int weight, std::vector<HodgePiece> pieces)
    : weight_(weight), pieces_(std::move(pieces)) {
  if (pieces_.empty())
    throw ValidationError("direct sum", "HodgeDecomposition", "no pieces given");
  std::set<std::pair<int, int>> seen;
  for (const auto& piece : pieces_) {
    if (piece.p + piece.q != weight_)
      throw ValidationError("weight consistency", "HodgeDecomposition",
                            piece_name(piece.p, piece.q) + " in weight " +
                                std::to_string(weight_));
    if (!seen.insert({piece.p, piece.q}).second)
      throw ValidationError("direct sum", "HodgeDecomposition",
                            "duplicate " + piece_name(piece.p, piece.q));
    if (piece.basis.empty())
      throw ValidationError("direct sum", "HodgeDecomposition",
                            piece_name(piece.p, piece.q) + " has an empty basis");
    for (const auto& v : piece.basis) {
      if (ambient_ == 0) ambient_ = int(v.size());
      if (int(v.size()) != ambient_ || v.empty())
        throw ValidationError("direct sum", "HodgeDecomposition",
                              "basis vectors of inconsistent length");
    }
    dim_ += int(piece.basis.size());
  }
}

WeilOperator WeilOperator::from_matrix(const PolarizedLattice& l, QMat c,
                                       const std::string& where) {
  const int n = l.rank();
  if (!c.is_square() || c.rows() != n) throw DimensionError("Weil operator of wrong size");
  const bool even = l.even_weight();
  const QMat c2 = c * c;
  if (even ? c2 != QMat::identity(n) : c2 != -QMat::identity(n))
    throw ValidationError("involution parity", where,
                          even ? "C^2 must be the identity in even weight"
                               : "C^2 must be minus the identity in odd weight");
  if (!is_isometry(l, c))
    throw ValidationError("isometry", where, "C does not preserve the pairing");

  const QMat form = l.gram() * c;
  if (form != form.transpose())
    throw ValidationError("hodge form symmetric", where, "Q(v, Cw) is not symmetric");
  int sign;
  if (even) {
    ldl_decompose(form, where);  // throws "positive definite" on failure
    sign = 1;
  } else {
    if (is_positive_definite(form))
      sign = 1;
    else if (is_positive_definite(-form))
      sign = -1;
    else
      throw ValidationError("hodge form definite", where,
                            "Q(v, Cw) is neither positive nor negative definite");
  }
  return WeilOperator(std::move(c), even, sign);
}

WeilOperator weil_operator(const PolarizedLattice& l, const HodgeDecomposition& h) {
  const std::string where = "weil_operator";
  const int n = l.rank();
  if (h.weight() != l.weight())
    throw ValidationError("weight consistency", where,
                          "decomposition weight " + std::to_string(h.weight()) +
                              " differs from lattice weight " + std::to_string(l.weight()));
  if (h.ambient() != n)
    throw DimensionError("decomposition vectors have length different from the rank");
  if (h.dim() != n)
    throw ValidationError("direct sum", where,
                          "piece dimensions sum to " + std::to_string(h.dim()) +
                              ", expected " + std::to_string(n));

  GMat p_cols(n, n);
  std::vector<GaussRational> diag(n);
  {
    int col = 0;
    for (const auto& piece : h.pieces())
      for (const auto& v : piece.basis) {
        for (int i = 0; i < n; ++i) p_cols(i, col) = v[i];
        diag[col] = GaussRational::i_pow(piece.p - piece.q);
        ++col;
      }
  }
  if (rank(p_cols) != n)
    throw ValidationError("direct sum", where, "pieces do not span C^n");

  for (const auto& piece : h.pieces()) {
    const auto partner =
        std::find_if(h.pieces().begin(), h.pieces().end(), [&](const HodgePiece& other) {
          return other.p == piece.q && other.q == piece.p;
        });
    if (partner == h.pieces().end())
      throw ValidationError("conjugation symmetry", where,
                            "no partner for " + piece_name(piece.p, piece.q));
    std::vector<GVec> conj_basis;
    conj_basis.reserve(piece.basis.size());
    for (const auto& v : piece.basis) conj_basis.push_back(conj_vec(v));
    if (!span_equal(conj_basis, partner->basis, n))
      throw ValidationError("conjugation symmetry", where,
                            "conjugate of " + piece_name(piece.p, piece.q) +
                                " does not span " + piece_name(piece.q, piece.p));
  }

  for (const auto& a : h.pieces())
    for (const auto& b : h.pieces()) {
      if (b.p == h.weight() - a.p) continue;
      for (const auto& u : a.basis)
        for (const auto& v : b.basis)
          if (!l.pair(u, v).is_zero())
            throw ValidationError("first Riemann orthogonality", where,
                                  piece_name(a.p, a.q) + " pairs nontrivially with " +
                                      piece_name(b.p, b.q));
    }

  int positivity = 0;  // common sign across pieces, 0 until seen
  for (const auto& piece : h.pieces()) {
    const int m = int(piece.basis.size());
    GMat herm(m, m);
    const GaussRational factor = GaussRational::i_pow(piece.p - piece.q);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        herm(a, b) = factor * l.pair(piece.basis[a], conj_vec(piece.basis[b]));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (herm(a, b) != herm(b, a).conj())
          throw ValidationError("polarization positivity", where,
                                piece_name(piece.p, piece.q) + " form is not Hermitian");
    const Definiteness d = hermitian_definiteness(herm);
    if (d == Definiteness::Indefinite)
      throw ValidationError("polarization positivity", where,
                            piece_name(piece.p, piece.q) + " form is not definite");
    const int s = d == Definiteness::Positive ? 1 : -1;
    if (l.even_weight() && s != 1)
      throw ValidationError("polarization positivity", where,
                            piece_name(piece.p, piece.q) + " form is negative");
    if (positivity == 0) positivity = s;
    if (s != positivity)
      throw ValidationError("polarization positivity", where,
                            "pieces disagree on the global sign");
  }

  GMat d_mat(n, n);
  for (int i = 0; i < n; ++i) d_mat(i, i) = diag[i];
  const GMat c_complex = p_cols * d_mat * inverse(p_cols);
  QMat c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!c_complex(i, j).is_real())
        throw ValidationError("rational Weil operator", where,
                              "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") has imaginary part " + c_complex(i, j).im().str());
      c(i, j) = c_complex(i, j).re();
    }
  return WeilOperator::from_matrix(l, std::move(c), where);
}

HodgeNormForm hodge_norm_form(const PolarizedLattice& l, const WeilOperator& c) {
  if (!c.even()) throw DimensionError("hodge_norm_form requires even weight");
  const QMat form = l.gram() * c.matrix();
  if (form != form.transpose())
    throw ValidationError("hodge form symmetric", "hodge_norm_form", "Q(v, Cw) not symmetric");
  ldl_decompose(form, "hodge_norm_form");
  return HodgeNormForm{form};
}

std::pair<QVec, QVec> split_selfdual(const WeilOperator& c, const QVec& v) {
  if (!c.even()) throw DimensionError("split_selfdual requires even weight");
  const QVec cv = c.apply(v);
  const Rational half(1, 2);
  return {vec_scale(vec_add(v, cv), half), vec_scale(vec_sub(v, cv), half)};
}

WeilOperator conjugate_weil(const PolarizedLattice& l, const WeilOperator& c, const QMat& g) {
  if (!is_isometry(l, g))
    throw ValidationError("isometry", "conjugate_weil", "conjugator is not an isometry");
  return WeilOperator::from_matrix(l, g * c.matrix() * inverse(g), "conjugate_weil");
}

}  // namespace weil
