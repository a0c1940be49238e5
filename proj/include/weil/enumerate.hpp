#pragma once

#include <vector>

#include "weil/hodge.hpp"
#include "weil/tensor.hpp"

namespace weil {

enum class EnumerationMode { SelfDual, AntiSelfDual, Pairs };

struct EnumerationResult {
  EnumerationMode mode;
  Int q;
  std::vector<IVec> vectors;  // lexicographically ascending, duplicate-free
};

// Complete set {v in Z^n : v^T gram_c v = q}, lexicographically sorted.
// Exact LDL bound propagation; the parallel and serial routes return
// identical lists.
std::vector<IVec> enumerate_norm(const HodgeNormForm& g, const Int& q);
std::vector<IVec> enumerate_norm_serial(const HodgeNormForm& g, const Int& q);

// Entries marked in forced_zero are pinned to 0 inside the tree search.
std::vector<IVec> enumerate_norm_masked(const HodgeNormForm& g, const Int& q,
                                        const std::vector<bool>& forced_zero, bool parallel);

EnumerationResult enumerate_selfdual(const PolarizedLattice& l, const WeilOperator& c,
                                     const Int& q);
EnumerationResult enumerate_antiselfdual(const PolarizedLattice& l, const WeilOperator& c,
                                         const Int& q);

// Pairs (v, w) with v = Cw and Q(v, w) = q, emitted as concatenated vectors.
// Both weight parities route through the tensor constructions.
EnumerationResult enumerate_pairs(const PolarizedLattice& l, const WeilOperator& c, const Int& q);

// True iff Cv = -w and Cw = v, i.e. v + iw is an i-eigenvector over Z[i].
bool gaussian_eigenvector_check(const WeilOperator& c, const IVec& v, const IVec& w);

}  // namespace weil
