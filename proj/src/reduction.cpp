#include "weil/reduction.hpp"

#include <string>

#include "weil/error.hpp"
#include "weil/linalg.hpp"

namespace weil {

std::map<int, Rational> default_minkowski_constants() {
  return {{1, Rational(1)},        {2, Rational(4, 3L)}, {3, Rational(2)},
          {4, Rational(4)},        {5, Rational(8)},     {6, Rational(64, 3L)},
          {7, Rational(64)},       {8, Rational(256)}};
}

std::vector<std::string> ReductionReport::failures() const {
  std::vector<std::string> out;
  if (!size_chain) out.push_back("size_chain");
  if (!off_diagonal) out.push_back("off_diagonal");
  if (!orthogonality_defect) out.push_back("orthogonality_defect");
  return out;
}

namespace {

void check_params(const ReductionParams& params, const std::string& where) {
  if (!(params.t > Rational(0)))
    throw ValidationError("positive threshold", where, "t = " + params.t.str() + " (need t > 0)");
  for (const auto& [n, c] : params.c1)
    if (c < Rational(1))
      throw ValidationError("minkowski constant", where,
                            "c1(" + std::to_string(n) + ") = " + c.str() + " (need >= 1)");
}

const Rational& minkowski_constant(const ReductionParams& params, int n,
                                   const std::string& where) {
  auto it = params.c1.find(n);
  if (it == params.c1.end())
    throw ValidationError("minkowski constant", where,
                          "c1 unconfigured for n = " + std::to_string(n));
  return it->second;
}

QMat pairwise_gram(const QMat& g, const OrderedBasis& basis, const std::string& where) {
  if (g.rows() != g.cols()) throw DimensionError(where + ": gram matrix must be square");
  if (g.transpose() != g)
    throw ValidationError("symmetric form", where, "gram matrix is not symmetric");
  if (!is_positive_definite(g))
    throw ValidationError("positive definite", where, "gram matrix is not positive definite");
  const int n = int(basis.size());
  if (n == 0) throw ValidationError("ordered basis", where, "basis is empty");
  for (const auto& v : basis)
    if (int(v.size()) != g.rows())
      throw DimensionError(where + ": basis vector length " + std::to_string(v.size()) +
                           " vs gram size " + std::to_string(g.rows()));
  if (rank(columns_matrix(basis, g.rows())) != n)
    throw ValidationError("ordered basis", where, "basis vectors are linearly dependent");
  QMat out(n, n);
  for (int i = 0; i < n; ++i) {
    const QVec gi = g.apply(basis[i]);
    for (int j = 0; j < n; ++j) {
      Rational s;
      for (int k = 0; k < g.rows(); ++k) s += gi[k] * basis[j][k];
      out(i, j) = s;
    }
  }
  return out;
}

ReductionReport evaluate(const QMat& pg, const ReductionParams& params,
                         const std::string& where) {
  const int n = pg.rows();
  const Rational& c1 = minkowski_constant(params, n, where);
  ReductionReport report;
  for (int i = 0; i + 1 < n; ++i)
    if (pg(i, i) > params.t * pg(i + 1, i + 1)) report.size_chain = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (Rational(2) * pg(i, j).abs() > params.t * pg(i, i)) report.off_diagonal = false;
  Rational prod(1);
  for (int i = 0; i < n; ++i) prod = prod * pg(i, i);
  if (prod > params.t * c1 * determinant(pg)) report.orthogonality_defect = false;
  return report;
}

}  // namespace

ReductionReport is_t_reduced(const QMat& g, const OrderedBasis& basis,
                             const ReductionParams& params) {
  const std::string where = "is_t_reduced";
  check_params(params, where);
  return evaluate(pairwise_gram(g, basis, where), params, where);
}

ReductionReport siegel_membership(const PolarizedLattice& l, const OrderedBasis& basis,
                                  const ReductionParams& params, const WeilOperator& c_g) {
  const std::string where = "siegel_membership";
  check_params(params, where);
  if (c_g.matrix().rows() != l.rank())
    throw DimensionError(where + ": operator size " + std::to_string(c_g.matrix().rows()) +
                         " vs lattice rank " + std::to_string(l.rank()));
  return evaluate(pairwise_gram(l.gram() * c_g.matrix(), basis, where), params, where);
}

int insert_orthogonal_vector(const QMat& g, const OrderedBasis& basis, const QVec& a,
                             const ReductionParams& params) {
  const std::string where = "insert_orthogonal_vector";
  check_params(params, where);
  if (params.t < Rational(1))
    throw ValidationError("insertion threshold", where,
                          "t = " + params.t.str() + " (need t >= 1)");
  if (!is_t_reduced(g, basis, params).reduced())
    throw ValidationError("reduced basis", where, "basis is not t-reduced");
  if (int(a.size()) != g.rows())
    throw DimensionError(where + ": vector length " + std::to_string(a.size()) +
                         " vs gram size " + std::to_string(g.rows()));
  if (vec_is_zero(a)) throw ValidationError("nonzero vector", where, "a must be nonzero");
  const QVec ga = g.apply(a);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Rational s;
    for (int k = 0; k < g.rows(); ++k) s += basis[i][k] * ga[k];
    if (!s.is_zero())
      throw ValidationError("orthogonal vector", where,
                            "a pairs with basis vector " + std::to_string(i) + " to " + s.str());
  }
  const int n = int(basis.size()) + 1;
  for (int i = 0; i < n; ++i) {
    OrderedBasis extended;
    extended.reserve(std::size_t(n));
    extended.insert(extended.end(), basis.begin(), basis.begin() + i);
    extended.push_back(a);
    extended.insert(extended.end(), basis.begin() + i, basis.end());
    if (is_t_reduced(g, extended, params).reduced()) return i;
  }
  throw ValidationError("insertion position", where, "no valid position found");
}

}  // namespace weil
