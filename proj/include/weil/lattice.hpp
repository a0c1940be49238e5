#pragma once

#include "weil/linalg.hpp"
#include "weil/matrix.hpp"

namespace weil {

struct Signature {
  int positive = 0;
  int negative = 0;
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.positive == b.positive && a.negative == b.negative;
  }
};

// Inertia counts of a symmetric rational matrix via exact congruence
// elimination (hyperbolic 2x2 split when the diagonal vanishes).
// Throws ValidationError("nondegenerate") on singular input.
Signature signature_of(const QMat& symmetric);

// Integral lattice with a nondegenerate pairing whose symmetry matches the
// weight parity: symmetric in even weight, antisymmetric in odd weight.
class PolarizedLattice {
 public:
  PolarizedLattice(int weight, QMat gram);

  int rank() const { return gram_.rows(); }
  int weight() const { return weight_; }
  bool even_weight() const { return weight_ % 2 == 0; }
  const QMat& gram() const { return gram_; }

  Rational pair(const QVec& v, const QVec& w) const;
  // Bilinear (not sesquilinear) extension to Q(i); conjugation is explicit
  // at call sites.
  GaussRational pair(const GVec& v, const GVec& w) const;

  Signature signature() const;  // even weight only

 private:
  int weight_;
  QMat gram_;
};

bool is_isometry(const PolarizedLattice& l, const QMat& g);

}  // namespace weil
