#pragma once

#include <cstdint>
#include <vector>

#include "weil/matrix.hpp"

namespace testsupport {

// Deterministic PRNG so failures replay identically everywhere.
struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
  // Uniform-ish integer in [lo, hi].
  long pick(long lo, long hi) { return lo + long(next() % std::uint64_t(hi - lo + 1)); }
  weil::Rational rat(long span = 9, long den_max = 4) {
    return weil::Rational(pick(-span, span), pick(1, den_max));
  }
  weil::QVec ivec(int n, long span = 9) {
    weil::QVec v(n);
    for (auto& x : v) x = weil::Rational(pick(-span, span));
    return v;
  }
};

// Gaussian-rational vector from (re, im) integer pairs.
inline weil::GVec gv(const std::vector<std::pair<long, long>>& entries) {
  weil::GVec v(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k)
    v[k] = weil::GaussRational(weil::Rational(entries[k].first),
                               weil::Rational(entries[k].second));
  return v;
}

inline weil::QMat qmat(const std::vector<std::vector<long>>& rows) {
  weil::QMat m(int(rows.size()), int(rows.empty() ? 0 : rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = weil::Rational(rows[i][j]);
  return m;
}

}  // namespace testsupport
