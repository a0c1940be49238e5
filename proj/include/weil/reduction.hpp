#pragma once

#include <map>
#include <string>
#include <vector>

#include "weil/hodge.hpp"
#include "weil/lattice.hpp"
#include "weil/matrix.hpp"

namespace weil {

// Per-dimension constants for the determinant bound. The defaults are the
// n-th powers of Hermite's constants up to n = 8; they are configuration,
// not ground truth, and callers may override them.
std::map<int, Rational> default_minkowski_constants();

struct ReductionParams {
  Rational t = Rational(1);
  std::map<int, Rational> c1 = default_minkowski_constants();
};

// Verdict of the three reduction conditions, evaluated exactly:
//   size_chain            |v_i|^2 <= t |v_{i+1}|^2
//   off_diagonal          2 |<v_i, v_j>| <= t |v_i|^2   (i < j)
//   orthogonality_defect  prod |v_i|^2 <= t c1(n) det(<v_i, v_j>)
struct ReductionReport {
  bool size_chain = true;
  bool off_diagonal = true;
  bool orthogonality_defect = true;
  bool reduced() const { return size_chain && off_diagonal && orthogonality_defect; }
  std::vector<std::string> failures() const;
};

using OrderedBasis = std::vector<QVec>;

// Evaluates the reduction conditions for the inner product v^T g w on an
// ordered independent basis. g must be symmetric positive definite.
ReductionReport is_t_reduced(const QMat& g, const OrderedBasis& basis,
                             const ReductionParams& params);

// Membership in the reduction domain attached to (basis, t): the conditions
// are applied to the positive form Q(v, C_g w), where C_g is the conjugated
// operator supplied by the caller (conjugate_weil for callers holding g).
ReductionReport siegel_membership(const PolarizedLattice& l, const OrderedBasis& basis,
                                  const ReductionParams& params, const WeilOperator& c_g);

// Given a t-reduced basis of length n-1 and a nonzero vector a orthogonal to
// all of it, returns the smallest index i in 0..n-1 such that inserting a at
// position i keeps the extended basis t-reduced. Requires t >= 1, which is
// what guarantees a valid position exists.
int insert_orthogonal_vector(const QMat& g, const OrderedBasis& basis, const QVec& a,
                             const ReductionParams& params);

}  // namespace weil
