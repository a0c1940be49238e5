#pragma once

#include <map>
#include <string>
#include <vector>

#include "weil/hodge.hpp"
#include "weil/laurent.hpp"
#include "weil/lattice.hpp"
#include "weil/linalg.hpp"

namespace weil {

// Raw input for a one-parameter orbit z -> e^{zN} F on the upper half-plane.
// The filtration maps each level p to a Q(i)-basis of F^p; levels below the
// smallest key default to the full space, levels above the largest to zero.
struct SL2Input {
  PolarizedLattice lattice;
  QMat n;
  QMat y;
  std::map<int, std::vector<GVec>> f;
};

// Fully validated orbit data.  Validation checks, in order: N nilpotent and an
// infinitesimal isometry, same for Y, Y semisimple with integer spectrum,
// [Y, N] = -2N, e^N integral, the filtration conditions, that e^{iN}F is the
// Hodge filtration of a polarized structure (whose Weil operator is cached as
// the limit operator), the anticommutation of Y with that operator, and that
// the Y-eigenspace filtration agrees with the one intrinsic to N.
class SL2OrbitData {
 public:
  static SL2OrbitData validate(SL2Input input);

  const PolarizedLattice& lattice() const { return input_.lattice; }
  const QMat& n() const { return input_.n; }
  const QMat& y() const { return input_.y; }
  const std::map<int, std::vector<GVec>>& filtration() const { return input_.f; }
  const WeilOperator& limit_weil() const { return limit_weil_; }

  // Integer eigenvalues of Y in ascending order, with matching kernel bases.
  const std::vector<int>& spectrum() const { return spectrum_; }
  const std::vector<std::vector<QVec>>& eigenbases() const { return eigenbases_; }
  const QMat& eigen_columns() const { return p_; }
  const QMat& eigen_columns_inv() const { return p_inv_; }

  // Audit notes on conventions fixed during validation.
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  SL2OrbitData(SL2Input input, WeilOperator limit_weil)
      : input_(std::move(input)), limit_weil_(std::move(limit_weil)) {}

  SL2Input input_;
  WeilOperator limit_weil_;
  std::vector<int> spectrum_;
  std::vector<std::vector<QVec>> eigenbases_;
  QMat p_;
  QMat p_inv_;
  std::vector<std::string> notes_;
};

// Exact eigenprojections of v: one entry per spectrum value, summing to v.
std::map<int, QVec> weight_spaces(const SL2OrbitData& d, const QVec& v);

// W_ell as the span of the Y-eigenspaces with eigenvalue <= ell.
std::vector<QVec> weight_filtration(const SL2OrbitData& d, int ell);

// The same filtration computed from N alone (kernels and images of powers);
// used as the independent cross-check during validation.
std::vector<QVec> intrinsic_weight_filtration(const QMat& n_mat, int ell);

// The Weil operator of e^{zN}F as a matrix over Q[x][s, 1/s], with z = x + iy
// and s = sqrt(y): E(x) S(1/s) C S(s) E(-x), where E(x) = exp(xN) and S(s)
// scales the ell-eigenspace of Y by s^ell.
LMat weil_symbolic(const SL2OrbitData& d);

// Exact specialization at rational x and s > 0.
QMat weil_at(const SL2OrbitData& d, const Rational& x, const Rational& s);

// Whether C( S(s) e^{-xN} v ) = S(s) e^{-xN} v at the given point.
bool is_selfdual_at(const SL2OrbitData& d, const QVec& v, const Rational& x, const Rational& s);

enum class LocusTag { Empty, FullDisk, Ray };

struct LocusComponent {
  LocusTag tag;
  Rational ray_x;  // meaningful only when tag == Ray
};

// Classifies the self-dual locus of v in the upper half-plane: the whole
// plane, a single vertical ray Re z = x, or no unbounded-height component
// ("Empty"; the pointwise predicate stays authoritative for bounded regions).
LocusComponent classify_locus(const SL2OrbitData& d, const QVec& v);

struct GridSpec {
  std::vector<Rational> xs;  // ascending
  std::vector<Rational> ss;  // ascending, all positive
  static GridSpec defaults();
};

struct GridRow {
  Rational x;
  Rational s;
  bool selfdual;
  bool operator==(const GridRow& o) const {
    return x == o.x && s == o.s && selfdual == o.selfdual;
  }
};

// Evaluates is_selfdual_at on every grid node, ordered by (x, s).  The
// parallel and serial routes return identical rows.
std::vector<GridRow> scan_grid(const SL2OrbitData& d, const QVec& v, const GridSpec& g);
std::vector<GridRow> scan_grid_serial(const SL2OrbitData& d, const QVec& v, const GridSpec& g);

}  // namespace weil
