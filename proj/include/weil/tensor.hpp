#pragma once

#include <vector>

#include "weil/hodge.hpp"
#include "weil/lattice.hpp"

namespace weil {

enum class TensorKind { Weight1Tensor, Sym2Tensor };

// Even-weight polarized structure built from a base structure, with the
// bookkeeping needed to project product vectors back to base components.
class TensorStructure {
 public:
  TensorStructure(TensorKind kind, PolarizedLattice base, WeilOperator base_weil,
                  PolarizedLattice product, WeilOperator product_weil);

  TensorKind kind() const { return kind_; }
  const PolarizedLattice& base() const { return base_; }
  const WeilOperator& base_weil() const { return base_weil_; }
  const PolarizedLattice& product() const { return product_; }
  const WeilOperator& product_weil() const { return product_weil_; }
  int slots() const { return kind_ == TensorKind::Weight1Tensor ? 2 : 3; }

  std::vector<QVec> split(const QVec& v) const;
  QVec join(const std::vector<QVec>& parts) const;

 private:
  TensorKind kind_;
  PolarizedLattice base_;
  WeilOperator base_weil_;
  PolarizedLattice product_;
  WeilOperator product_weil_;
};

// Rank-2n even structure on pairs (a1, a2) over an odd-weight base:
// pairing (a,b) -> Q(a1,b2) - Q(a2,b1), operator (a1,a2) -> (C a2, -C a1).
TensorStructure tensor_weight1(const PolarizedLattice& l, const WeilOperator& c);

// Rank-3n even structure on triples over an even-weight base:
// pairing Q(a1,b3) + Q(a3,b1) - Q(a2,b2), operator (a1,a2,a3) -> (C a3, -C a2, C a1).
TensorStructure tensor_sym2(const PolarizedLattice& l, const WeilOperator& c);

}  // namespace weil
