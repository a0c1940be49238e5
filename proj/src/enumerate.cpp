#include "weil/enumerate.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weil {

namespace {

struct SearchContext {
  const QMat& l;             // unit lower factor
  const QVec& d;             // positive pivots
  const std::vector<bool>& forced_zero;
  int n;
};

// Levels are processed from n-1 down; shift[i] accumulates the off-diagonal
// contribution sum_{j>i} L(j,i) v_j, so the level cost is d_i (v_i+shift_i)^2.
void dfs(const SearchContext& ctx, int level, IVec& v, QVec& shift, const Rational& remaining,
         std::vector<IVec>& out) {
  if (level < 0) {
    if (remaining.is_zero()) out.push_back(v);
    return;
  }
  const Rational& di = ctx.d[level];
  auto descend = [&](const Int& m) {
    const Rational w = Rational(m) + shift[level];
    const Rational next = remaining - di * w * w;
    if (next.sign() < 0) return;
    v[level] = to_int64(m);
    QVec next_shift = shift;
    if (sgn(m) != 0)
      for (int k = 0; k < level; ++k)
        next_shift[k] = next_shift[k] + ctx.l(level, k) * Rational(m);
    dfs(ctx, level - 1, v, next_shift, next, out);
  };
  if (ctx.forced_zero[level]) {
    descend(Int(0));
    return;
  }
  const IntRange range = int_range_quadratic(-shift[level], remaining / di);
  if (range.empty) return;
  for (Int m = range.lo; m <= range.hi; m += 1) descend(m);
}

std::vector<IVec> run_search(const QMat& gram, const Int& q,
                             const std::vector<bool>& forced_zero, bool parallel) {
  const auto ldl = ldl_decompose(gram, "enumerate_norm");
  const int n = gram.rows();
  const SearchContext ctx{ldl.l, ldl.d, forced_zero, n};
  const Rational target{q};
  std::vector<IVec> out;

  const int top = n - 1;
  IVec v(n, 0);
  QVec shift(n);
  if (ctx.forced_zero[top] || !parallel) {
    dfs(ctx, top, v, shift, target, out);
  } else {
    const IntRange range = int_range_quadratic(Rational(0), target / ctx.d[top]);
    if (!range.empty) {
      const long count = long(to_int64(Int(range.hi - range.lo))) + 1;
      std::vector<std::vector<IVec>> buckets(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (long idx = 0; idx < count; ++idx) {
        const Int m = range.lo + idx;
        const Rational w{m};
        const Rational next = target - ctx.d[top] * w * w;
        if (next.sign() < 0) continue;
        IVec local_v(n, 0);
        local_v[top] = to_int64(m);
        QVec local_shift(n);
        if (sgn(m) != 0)
          for (int k = 0; k < top; ++k) local_shift[k] = ctx.l(top, k) * Rational(m);
        dfs(ctx, top - 1, local_v, local_shift, next, buckets[idx]);
      }
      for (auto& bucket : buckets)
        out.insert(out.end(), bucket.begin(), bucket.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<bool> no_mask(int n) { return std::vector<bool>(n, false); }

void require_positive(const Int& q, const std::string& where) {
  if (sgn(q) <= 0)
    throw ValidationError("positive target", where, "q = " + q.get_str() + " (need q >= 1)");
}

QVec to_rational_vec(const IVec& v) { return to_qvec(v); }

EnumerationResult filter_eigen(const PolarizedLattice& l, const WeilOperator& c, const Int& q,
                               EnumerationMode mode) {
  const std::string where =
      mode == EnumerationMode::SelfDual ? "enumerate_selfdual" : "enumerate_antiselfdual";
  require_positive(q, where);
  if (!l.even_weight())
    throw ValidationError("weight parity", where, "odd weight routes through enumerate_pairs");
  const auto form = hodge_norm_form(l, c);
  const Rational sign = mode == EnumerationMode::SelfDual ? Rational(1) : Rational(-1);
  EnumerationResult result{mode, q, {}};
  for (auto& v : enumerate_norm(form, q)) {
    const QVec qv = to_rational_vec(v);
    if (c.apply(qv) == vec_scale(qv, sign)) result.vectors.push_back(std::move(v));
  }
  return result;
}

}  // namespace

std::vector<IVec> enumerate_norm(const HodgeNormForm& g, const Int& q) {
  require_positive(q, "enumerate_norm");
  return run_search(g.gram_c, q, no_mask(g.gram_c.rows()), true);
}

std::vector<IVec> enumerate_norm_serial(const HodgeNormForm& g, const Int& q) {
  require_positive(q, "enumerate_norm");
  return run_search(g.gram_c, q, no_mask(g.gram_c.rows()), false);
}

std::vector<IVec> enumerate_norm_masked(const HodgeNormForm& g, const Int& q,
                                        const std::vector<bool>& forced_zero, bool parallel) {
  require_positive(q, "enumerate_norm");
  if (int(forced_zero.size()) != g.gram_c.rows())
    throw DimensionError("forced_zero mask of wrong length");
  return run_search(g.gram_c, q, forced_zero, parallel);
}

EnumerationResult enumerate_selfdual(const PolarizedLattice& l, const WeilOperator& c,
                                     const Int& q) {
  return filter_eigen(l, c, q, EnumerationMode::SelfDual);
}

EnumerationResult enumerate_antiselfdual(const PolarizedLattice& l, const WeilOperator& c,
                                         const Int& q) {
  return filter_eigen(l, c, q, EnumerationMode::AntiSelfDual);
}

EnumerationResult enumerate_pairs(const PolarizedLattice& l, const WeilOperator& c, const Int& q) {
  require_positive(q, "enumerate_pairs");
  EnumerationResult result{EnumerationMode::Pairs, q, {}};
  if (!l.even_weight()) {
    const TensorStructure ts = tensor_weight1(l, c);
    const auto sub = enumerate_selfdual(ts.product(), ts.product_weil(), Int(2) * q);
    result.vectors = sub.vectors;  // (a1, a2) already reads as (v, w)
    return result;
  }
  const TensorStructure ts = tensor_sym2(l, c);
  const int n = l.rank();
  std::vector<bool> mask(3 * n, false);
  for (int i = n; i < 2 * n; ++i) mask[i] = true;
  const auto form = hodge_norm_form(ts.product(), ts.product_weil());
  for (const auto& triple : enumerate_norm_masked(form, Int(2) * q, mask, true)) {
    const QVec qv = to_rational_vec(triple);
    if (ts.product_weil().apply(qv) != qv) continue;
    IVec pair(2 * n);
    for (int i = 0; i < n; ++i) {
      pair[i] = triple[i];
      pair[n + i] = triple[2 * n + i];
    }
    result.vectors.push_back(std::move(pair));
  }
  return result;
}

bool gaussian_eigenvector_check(const WeilOperator& c, const IVec& v, const IVec& w) {
  if (c.even())
    throw ValidationError("weight parity", "gaussian_eigenvector_check",
                          "the i-eigenvector criterion needs odd weight");
  const QVec qv = to_qvec(v), qw = to_qvec(w);
  return c.apply(qv) == vec_scale(qw, Rational(-1)) && c.apply(qw) == qv;
}

}  // namespace weil
