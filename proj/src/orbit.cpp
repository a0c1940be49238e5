#include "weil/orbit.hpp"

#include <algorithm>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weil {

namespace {

std::vector<GVec> complex_standard_basis(int n) {
  std::vector<GVec> out(n, GVec(n));
  for (int i = 0; i < n; ++i) out[i][i] = GaussRational(1);
  return out;
}

GVec conj_vec(const GVec& v) {
  GVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].conj();
  return out;
}

// S(s) = P diag(s^ell) P^{-1}; applied through eigencoordinates.
QVec apply_scaling(const SL2OrbitData& d, const Rational& s, int direction, const QVec& v) {
  QVec coords = d.eigen_columns_inv().apply(v);
  int col = 0;
  for (std::size_t k = 0; k < d.spectrum().size(); ++k) {
    const Rational factor = s.pow(direction * d.spectrum()[k]);
    for (std::size_t j = 0; j < d.eigenbases()[k].size(); ++j, ++col)
      coords[col] = coords[col] * factor;
  }
  return d.eigen_columns().apply(coords);
}

QMat scaling_matrix(const SL2OrbitData& d, const Rational& s, int direction) {
  const int n = d.lattice().rank();
  QMat diag(n, n);
  int col = 0;
  for (std::size_t k = 0; k < d.spectrum().size(); ++k)
    for (std::size_t j = 0; j < d.eigenbases()[k].size(); ++j, ++col)
      diag(col, col) = s.pow(direction * d.spectrum()[k]);
  return d.eigen_columns() * diag * d.eigen_columns_inv();
}

void require_positive_scale(const Rational& s, const std::string& where) {
  if (s.sign() <= 0)
    throw ValidationError("positive scale", where, "s = sqrt(y) must be > 0, got " + s.str());
}

}  // namespace

SL2OrbitData SL2OrbitData::validate(SL2Input input) {
  const PolarizedLattice& l = input.lattice;
  const int n = l.rank();
  const QMat& g = l.gram();
  if (!l.even_weight())
    throw ValidationError("weight parity", "validate_sl2", "orbit data requires even weight");
  if (!input.n.is_square() || input.n.rows() != n || !input.y.is_square() || input.y.rows() != n)
    throw DimensionError("orbit matrices must match the lattice rank");

  if (!is_nilpotent(input.n))
    throw ValidationError("nilpotent", "validate_sl2", "N^" + std::to_string(n) + " != 0");

  const QMat zero(n, n);
  if (!(input.n.transpose() * g + g * input.n == zero))
    throw ValidationError("infinitesimal isometry", "validate_sl2",
                          "Q(Nv, w) + Q(v, Nw) != 0");
  if (!(input.y.transpose() * g + g * input.y == zero))
    throw ValidationError("Y infinitesimal isometry", "validate_sl2",
                          "Q(Yv, w) + Q(v, Yw) != 0");

  // Gershgorin: every eigenvalue is bounded by the largest absolute row sum,
  // so scanning integers in that range finds the whole spectrum.
  Rational bound(0);
  for (int i = 0; i < n; ++i) {
    Rational row(0);
    for (int j = 0; j < n; ++j) row += input.y(i, j).abs();
    if (bound < row) bound = row;
  }
  std::vector<int> spectrum;
  std::vector<std::vector<QVec>> eigenbases;
  int total = 0;
  const long b = to_int64(bound.ceil());
  for (long ell = -b; ell <= b; ++ell) {
    QMat shifted = input.y;
    for (int i = 0; i < n; ++i) shifted(i, i) -= Rational(ell);
    auto basis = kernel_basis(shifted);
    if (basis.empty()) continue;
    total += int(basis.size());
    spectrum.push_back(int(ell));
    eigenbases.push_back(std::move(basis));
  }
  if (total != n)
    throw ValidationError("Y integral semisimple", "validate_sl2",
                          "integer eigenspaces span dimension " + std::to_string(total) +
                              " of " + std::to_string(n));

  if (!(input.y * input.n - input.n * input.y == input.n.scaled(Rational(-2))))
    throw ValidationError("sl2 commutation", "validate_sl2", "[Y, N] != -2N");

  const QMat en = matrix_exp_nilpotent(input.n, Rational(1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!en(i, j).is_integer())
        throw ValidationError("integral exponential", "validate_sl2", "e^N not integral");

  if (input.f.empty())
    throw ValidationError("filtration levels", "validate_sl2", "no filtration levels given");
  const int pmin = input.f.begin()->first;
  const int pmax = input.f.rbegin()->first;
  for (int p = pmin; p <= pmax; ++p)
    if (!input.f.count(p))
      throw ValidationError("filtration levels", "validate_sl2",
                            "missing level p = " + std::to_string(p));
  for (const auto& [p, basis] : input.f) {
    for (const auto& v : basis)
      if (int(v.size()) != n) throw DimensionError("filtration vector of wrong length");
    if (rank(columns_matrix(basis, n)) != int(basis.size()))
      throw ValidationError("filtration basis", "validate_sl2",
                            "level p = " + std::to_string(p) + " is not independent");
  }
  for (int p = pmin; p < pmax; ++p)
    if (!span_contained(input.f.at(p + 1), input.f.at(p), n))
      throw ValidationError("filtration nesting", "validate_sl2",
                            "F^" + std::to_string(p + 1) + " is not inside F^" +
                                std::to_string(p));

  const GMat yg = to_gmat(input.y);
  const GMat ng = to_gmat(input.n);
  for (const auto& [p, basis] : input.f) {
    for (const auto& v : basis) {
      if (!in_span(basis, yg.apply(v)))
        throw ValidationError("Y preserves filtration", "validate_sl2",
                              "Y F^" + std::to_string(p) + " escapes F^" + std::to_string(p));
      if (p - 1 >= pmin && !in_span(input.f.at(p - 1), ng.apply(v)))
        throw ValidationError("N shifts filtration", "validate_sl2",
                              "N F^" + std::to_string(p) + " escapes F^" + std::to_string(p - 1));
    }
  }

  // Limit structure: e^{iN} F must decompose as a polarized structure with
  // pieces F^p cap conj(F^{w-p}); its Weil operator is cached.
  const GMat ein = matrix_exp_nilpotent(to_gmat(input.n).scaled(GaussRational::i()));
  std::map<int, std::vector<GVec>> fsharp;
  for (const auto& [p, basis] : input.f) {
    std::vector<GVec> moved;
    moved.reserve(basis.size());
    for (const auto& v : basis) moved.push_back(ein.apply(v));
    fsharp.emplace(p, std::move(moved));
  }
  const auto level = [&](int p) -> std::vector<GVec> {
    if (p > pmax) return {};
    if (p < pmin) return complex_standard_basis(n);
    return fsharp.at(p);
  };
  const int w = l.weight();
  std::vector<HodgePiece> pieces;
  for (int p = pmax; p >= w - pmax; --p) {
    std::vector<GVec> other;
    for (const auto& v : level(w - p)) other.push_back(conj_vec(v));
    auto piece = span_intersection(level(p), other, n);
    if (!piece.empty()) pieces.push_back(HodgePiece{p, w - p, std::move(piece)});
  }
  const WeilOperator limit = weil_operator(l, HodgeDecomposition(w, std::move(pieces)));

  if (!(input.y * limit.matrix() + limit.matrix() * input.y == zero))
    throw ValidationError("weil anticommutation", "validate_sl2",
                          "Y does not anticommute with the limit Weil operator");

  SL2OrbitData out(std::move(input), limit);
  out.spectrum_ = std::move(spectrum);
  out.eigenbases_ = std::move(eigenbases);
  std::vector<QVec> cols;
  for (const auto& basis : out.eigenbases_)
    for (const auto& v : basis) cols.push_back(v);
  out.p_ = columns_matrix(cols, n);
  out.p_inv_ = inverse(out.p_);

  for (int ell = out.spectrum_.front() - 1; ell <= out.spectrum_.back(); ++ell) {
    if (!span_equal(weight_filtration(out, ell), intrinsic_weight_filtration(out.n(), ell), n))
      throw ValidationError("weight filtration match", "validate_sl2",
                            "Y-eigenspace filtration disagrees with the one intrinsic to N "
                            "at level " + std::to_string(ell));
  }

  out.notes_.push_back("convention audit: [Y, N] = -2N holds (N lowers the Y-grading by 2; "
                       "the raising convention [Y, N] = +2N would fail this data)");
  return out;
}

std::map<int, QVec> weight_spaces(const SL2OrbitData& d, const QVec& v) {
  const int n = d.lattice().rank();
  if (int(v.size()) != n) throw DimensionError("vector length does not match the lattice rank");
  const QVec coords = d.eigen_columns_inv().apply(v);
  std::map<int, QVec> out;
  int col = 0;
  for (std::size_t k = 0; k < d.spectrum().size(); ++k) {
    QVec part(n);
    for (std::size_t j = 0; j < d.eigenbases()[k].size(); ++j, ++col)
      part = vec_add(part, vec_scale(d.eigen_columns().column(col), coords[col]));
    out.emplace(d.spectrum()[k], std::move(part));
  }
  return out;
}

std::vector<QVec> weight_filtration(const SL2OrbitData& d, int ell) {
  std::vector<QVec> out;
  for (std::size_t k = 0; k < d.spectrum().size(); ++k) {
    if (d.spectrum()[k] > ell) break;
    for (const auto& v : d.eigenbases()[k]) out.push_back(v);
  }
  return out;
}

std::vector<QVec> intrinsic_weight_filtration(const QMat& n_mat, int ell) {
  if (!n_mat.is_square()) throw DimensionError("weight filtration of non-square matrix");
  const int n = n_mat.rows();
  std::vector<QMat> powers{QMat::identity(n)};
  for (int k = 1; k <= n; ++k) powers.push_back(powers.back() * n_mat);
  if (!powers[n].is_zero())
    throw ValidationError("nilpotent", "intrinsic_weight_filtration",
                          "N^" + std::to_string(n) + " != 0");
  // W_ell = sum over i >= 0 of ker N^{ell+i+1} cap im N^i.
  std::vector<QVec> gens;
  for (int i = 0; i <= n; ++i) {
    const int e = ell + i + 1;
    if (e <= 0) continue;
    if (powers[std::min(i, n)].is_zero()) break;
    std::vector<QVec> image;
    for (int j = 0; j < n; ++j) {
      QVec c = powers[i].column(j);
      if (!vec_is_zero(c)) image.push_back(std::move(c));
    }
    std::vector<QVec> term;
    if (e >= n || powers[e].is_zero()) {
      term = std::move(image);
    } else {
      term = span_intersection(kernel_basis(powers[e]), image, n);
    }
    for (auto& v : term) gens.push_back(std::move(v));
  }
  return gens;
}

LMat weil_symbolic(const SL2OrbitData& d) {
  const int n = d.lattice().rank();
  const LaurentBivar x_pos = LaurentBivar::monomial(1, 0, Rational(1));
  const LaurentBivar x_neg = LaurentBivar::monomial(1, 0, Rational(-1));
  const LMat ex = matrix_exp_nilpotent(to_lmat(d.n()).scaled(x_pos));
  const LMat ex_inv = matrix_exp_nilpotent(to_lmat(d.n()).scaled(x_neg));
  LMat up(n, n), down(n, n);
  int col = 0;
  for (std::size_t k = 0; k < d.spectrum().size(); ++k)
    for (std::size_t j = 0; j < d.eigenbases()[k].size(); ++j, ++col) {
      up(col, col) = LaurentBivar::monomial(0, d.spectrum()[k], Rational(1));
      down(col, col) = LaurentBivar::monomial(0, -d.spectrum()[k], Rational(1));
    }
  const LMat p = to_lmat(d.eigen_columns());
  const LMat p_inv = to_lmat(d.eigen_columns_inv());
  const LMat s_up = p * up * p_inv;
  const LMat s_down = p * down * p_inv;
  return ex * s_down * to_lmat(d.limit_weil().matrix()) * s_up * ex_inv;
}

QMat weil_at(const SL2OrbitData& d, const Rational& x, const Rational& s) {
  require_positive_scale(s, "weil_at");
  const QMat ex = matrix_exp_nilpotent(d.n(), x);
  const QMat ex_inv = matrix_exp_nilpotent(d.n(), -x);
  return ex * scaling_matrix(d, s, -1) * d.limit_weil().matrix() * scaling_matrix(d, s, +1) *
         ex_inv;
}

bool is_selfdual_at(const SL2OrbitData& d, const QVec& v, const Rational& x, const Rational& s) {
  require_positive_scale(s, "is_selfdual_at");
  const QVec moved = matrix_exp_nilpotent(d.n(), -x).apply(v);
  const QVec u = apply_scaling(d, s, +1, moved);
  return d.limit_weil().apply(u) == u;
}

LocusComponent classify_locus(const SL2OrbitData& d, const QVec& v) {
  const int n = d.lattice().rank();
  const auto parts = weight_spaces(d, v);
  for (const auto& [ell, part] : parts)
    if (ell > 0 && !vec_is_zero(part)) return {LocusTag::Empty, Rational(0)};
  const QVec v0 = parts.count(0) ? parts.at(0) : QVec(n);
  if (v == v0 && vec_is_zero(d.n().apply(v))) {
    if (d.limit_weil().apply(v) == v) return {LocusTag::FullDisk, Rational(0)};
    return {LocusTag::Empty, Rational(0)};
  }
  // A ray must have v = e^{xN} v0 with v0 fixed by the limit operator; x is
  // read off linearly from the weight -2 component, then verified exactly.
  const QVec nv0 = d.n().apply(v0);
  const QVec vm2 = parts.count(-2) ? parts.at(-2) : QVec(n);
  Rational x(0);
  for (int i = 0; i < n; ++i)
    if (!nv0[i].is_zero()) {
      x = vm2[i] / nv0[i];
      break;
    }
  if (matrix_exp_nilpotent(d.n(), x).apply(v0) == v &&
      d.limit_weil().apply(v0) == v0)
    return {LocusTag::Ray, x};
  return {LocusTag::Empty, Rational(0)};
}

GridSpec GridSpec::defaults() {
  GridSpec g;
  for (long k = -4; k <= 4; ++k) g.xs.push_back(Rational(k, 2L));
  for (long k = 1; k <= 8; ++k) g.ss.push_back(Rational(k));
  return g;
}

std::vector<GridRow> scan_grid_serial(const SL2OrbitData& d, const QVec& v, const GridSpec& g) {
  std::vector<GridRow> rows;
  rows.reserve(g.xs.size() * g.ss.size());
  for (const auto& x : g.xs)
    for (const auto& s : g.ss) rows.push_back({x, s, is_selfdual_at(d, v, x, s)});
  return rows;
}

std::vector<GridRow> scan_grid(const SL2OrbitData& d, const QVec& v, const GridSpec& g) {
  for (const auto& s : g.ss) require_positive_scale(s, "scan_grid");
  const long nx = long(g.xs.size()), ns = long(g.ss.size());
  std::vector<GridRow> rows(nx * ns);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long k = 0; k < nx * ns; ++k) {
    const auto& x = g.xs[k / ns];
    const auto& s = g.ss[k % ns];
    rows[k] = {x, s, is_selfdual_at(d, v, x, s)};
  }
  return rows;
}

}  // namespace weil
