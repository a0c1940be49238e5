#include "weil/k3.hpp"

#include <string>

#include "weil/error.hpp"
#include "weil/linalg.hpp"

namespace weil {

namespace {

void split(const GVec& sigma, QVec& re, QVec& im) {
  re.assign(sigma.size(), Rational());
  im.assign(sigma.size(), Rational());
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    re[k] = sigma[k].re();
    im[k] = sigma[k].im();
  }
}

}  // namespace

K3Period K3Period::validate(const PolarizedLattice& lattice, const GVec& sigma) {
  const std::string where = "K3Period";
  if (lattice.weight() % 2 != 0)
    throw ValidationError("weight parity", where, "period lattices must have even weight");
  if (int(sigma.size()) != lattice.rank())
    throw DimensionError(where + ": sigma length " + std::to_string(sigma.size()) +
                         " vs rank " + std::to_string(lattice.rank()));
  bool zero = true;
  for (const auto& z : sigma) zero = zero && z.is_zero();
  if (zero) throw ValidationError("zero vector", where, "sigma must be nonzero");

  const GaussRational self = lattice.pair(sigma, sigma);
  if (!self.is_zero())
    throw ValidationError("period isotropy", where,
                          "Q(sigma, sigma) = " + self.re().str() + " + " + self.im().str() +
                              "i (need 0)");
  GVec conj(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) conj[k] = sigma[k].conj();
  const GaussRational cross = lattice.pair(sigma, conj);
  if (!cross.is_real())
    throw ValidationError("period negativity", where, "Q(sigma, conj sigma) is not real");
  if (!(cross.re() < Rational(0)))
    throw ValidationError("period negativity", where,
                          "Q(sigma, conj sigma) = " + cross.re().str() + " (need < 0)");
  return K3Period(lattice, sigma, cross.re());
}

bool is_period_point(const PolarizedLattice& lattice, const GVec& sigma) {
  bool zero = true;
  for (const auto& z : sigma) zero = zero && z.is_zero();
  if (zero)
    throw ValidationError("zero vector", "is_period_point", "sigma must be nonzero");
  try {
    K3Period::validate(lattice, sigma);
  } catch (const ValidationError&) {
    return false;
  }
  return true;
}

bool antiselfdual_locus_contains(const K3Period& period, const QVec& v) {
  const auto& l = period.lattice();
  if (int(v.size()) != l.rank())
    throw DimensionError("antiselfdual_locus_contains: vector length " +
                         std::to_string(v.size()) + " vs rank " + std::to_string(l.rank()));
  const GVec& sigma = period.sigma();
  GVec conj(sigma.size()), gv(v.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) conj[k] = sigma[k].conj();
  for (std::size_t k = 0; k < v.size(); ++k) gv[k] = GaussRational(v[k]);
  const GaussRational a = l.pair(gv, conj);
  const GaussRational b = l.pair(gv, sigma);
  const GaussRational c(period.pairing());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (c * gv[k] != a * sigma[k] + b * conj[k]) return false;
  return true;
}

QMat locus_system(const K3Period& period) {
  const auto& l = period.lattice();
  const int n = l.rank();
  QVec s1, s2;
  split(period.sigma(), s1, s2);
  const QVec gs1 = l.gram().apply(s1);
  const QVec gs2 = l.gram().apply(s2);
  QMat m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = period.pairing();
    for (int j = 0; j < n; ++j)
      m(i, j) -= Rational(2) * (s1[std::size_t(i)] * gs1[std::size_t(j)] +
                                s2[std::size_t(i)] * gs2[std::size_t(j)]);
  }
  return m;
}

std::string verbitsky_label(int rank) {
  switch (rank) {
    case 0:
      return "dense orbit";
    case 1:
      return "anti-self-dual-locus closure";
    case 2:
      return "closed orbit";
    default:
      throw ValidationError("rank trichotomy", "verbitsky_label",
                            "rank = " + std::to_string(rank) + " (need 0, 1, or 2)");
  }
}

TranscendentalRank transcendental_rank(const K3Period& period) {
  const int r = period.lattice().rank() - rank(locus_system(period));
  return {r, verbitsky_label(r)};
}

}  // namespace weil
