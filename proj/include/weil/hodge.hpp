#pragma once

#include <utility>
#include <vector>

#include "weil/lattice.hpp"
#include "weil/linalg.hpp"
#include "weil/matrix.hpp"

namespace weil {

struct HodgePiece {
  int p;
  int q;
  std::vector<GVec> basis;
};

// Direct-sum decomposition of C^n into (p,q) pieces with p+q = weight,
// given by Q(i)-rational bases.  Construction checks shape-level coherence;
// the lattice-dependent invariants are verified in weil_operator.
class HodgeDecomposition {
 public:
  HodgeDecomposition(int weight, std::vector<HodgePiece> pieces);

  int weight() const { return weight_; }
  const std::vector<HodgePiece>& pieces() const { return pieces_; }
  int dim() const { return dim_; }
  int ambient() const { return ambient_; }

 private:
  int weight_;
  int dim_ = 0;      // sum of piece dimensions
  int ambient_ = 0;  // common vector length
  std::vector<HodgePiece> pieces_;
};

// The rational matrix acting as i^{p-q} on each H^{p,q}.  Squares to the
// identity in even weight and to minus the identity in odd weight, and is
// always an isometry of the pairing.  In odd weight the associated symmetric
// form Q(v, C w) is definite of one global sign, which is auto-detected and
// recorded (the corresponding piece-positivity sign is its negative).
class WeilOperator {
 public:
  static WeilOperator from_matrix(const PolarizedLattice& l, QMat c,
                                  const std::string& where = "WeilOperator");

  const QMat& matrix() const { return c_; }
  bool even() const { return even_; }
  // +1 when Q(v,Cw) is positive definite, -1 when negative definite.
  int form_sign() const { return form_sign_; }
  QVec apply(const QVec& v) const { return c_.apply(v); }

 private:
  WeilOperator(QMat c, bool even, int form_sign)
      : c_(std::move(c)), even_(even), form_sign_(form_sign) {}
  QMat c_;
  bool even_;
  int form_sign_;
};

// Validates the decomposition against the lattice (direct sum, conjugation
// symmetry, orthogonality, positivity) and assembles the operator by change
// of basis, verifying that every entry comes out rational.
WeilOperator weil_operator(const PolarizedLattice& l, const HodgeDecomposition& h);

struct HodgeNormForm {
  QMat gram_c;  // symmetric positive definite
};

HodgeNormForm hodge_norm_form(const PolarizedLattice& l, const WeilOperator& c);

// v = v_plus + v_minus with C v_plus = v_plus, C v_minus = -v_minus.
std::pair<QVec, QVec> split_selfdual(const WeilOperator& c, const QVec& v);

WeilOperator conjugate_weil(const PolarizedLattice& l, const WeilOperator& c, const QMat& g);

}  // namespace weil
