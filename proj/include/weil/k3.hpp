#pragma once

#include <string>

#include "weil/lattice.hpp"
#include "weil/matrix.hpp"

namespace weil {

// A surface-type period: a line [sigma] with Q(sigma, sigma) = 0 and
// Q(sigma, conj sigma) < 0 on an even-weight lattice. Coefficients live in
// Q(i), so every verdict below is exact.
class K3Period {
 public:
  static K3Period validate(const PolarizedLattice& lattice, const GVec& sigma);

  const PolarizedLattice& lattice() const { return lattice_; }
  const GVec& sigma() const { return sigma_; }
  // Q(sigma, conj sigma), always a negative rational.
  const Rational& pairing() const { return pairing_; }

 private:
  K3Period(PolarizedLattice lattice, GVec sigma, Rational pairing)
      : lattice_(std::move(lattice)), sigma_(std::move(sigma)), pairing_(std::move(pairing)) {}

  PolarizedLattice lattice_;
  GVec sigma_;
  Rational pairing_;
};

// Non-throwing form of the two period conditions (sigma must be nonzero).
bool is_period_point(const PolarizedLattice& lattice, const GVec& sigma);

// Whether Q(sigma, conj sigma) v = Q(v, conj sigma) sigma + Q(v, sigma) conj sigma,
// checked componentwise. Solutions are exactly the rational vectors lying in
// the real span of (Re sigma, Im sigma).
bool antiselfdual_locus_contains(const K3Period& period, const QVec& v);

// The locus equation in matrix form: v is a solution iff locus_system(p) v = 0.
QMat locus_system(const K3Period& period);

struct TranscendentalRank {
  int rank;
  std::string label;
};

std::string verbitsky_label(int rank);

// Rank of the solution subgroup of the locus equation, with its orbit label.
TranscendentalRank transcendental_rank(const K3Period& period);

}  // namespace weil
