#include "weil/tensor.hpp"

namespace weil {

namespace {

void put_block(QMat& m, int bi, int bj, const QMat& block, const Rational& scale) {
  const int n = block.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(bi * n + i, bj * n + j) = block(i, j) * scale;
}

}  // namespace

TensorStructure::TensorStructure(TensorKind kind, PolarizedLattice base, WeilOperator base_weil,
                                 PolarizedLattice product, WeilOperator product_weil)
    : kind_(kind),
      base_(std::move(base)),
      base_weil_(std::move(base_weil)),
      product_(std::move(product)),
      product_weil_(std::move(product_weil)) {}

std::vector<QVec> TensorStructure::split(const QVec& v) const {
  const int n = base_.rank();
  if (int(v.size()) != n * slots()) throw DimensionError("product vector of wrong length");
  std::vector<QVec> parts(slots(), QVec(n));
  for (int s = 0; s < slots(); ++s)
    for (int i = 0; i < n; ++i) parts[s][i] = v[s * n + i];
  return parts;
}

QVec TensorStructure::join(const std::vector<QVec>& parts) const {
  const int n = base_.rank();
  if (int(parts.size()) != slots()) throw DimensionError("wrong number of product components");
  QVec v(n * slots());
  for (int s = 0; s < slots(); ++s) {
    if (int(parts[s].size()) != n) throw DimensionError("component of wrong length");
    for (int i = 0; i < n; ++i) v[s * n + i] = parts[s][i];
  }
  return v;
}

TensorStructure tensor_weight1(const PolarizedLattice& l, const WeilOperator& c) {
  if (l.even_weight())
    throw ValidationError("weight parity", "tensor_weight1", "base weight must be odd");
  const int n = l.rank();
  QMat gram(2 * n, 2 * n), weil(2 * n, 2 * n);
  put_block(gram, 0, 1, l.gram(), Rational(1));
  put_block(gram, 1, 0, l.gram(), Rational(-1));
  put_block(weil, 0, 1, c.matrix(), Rational(1));
  put_block(weil, 1, 0, c.matrix(), Rational(-1));
  PolarizedLattice product(2 * l.weight(), std::move(gram));
  WeilOperator product_weil =
      WeilOperator::from_matrix(product, std::move(weil), "tensor_weight1");
  return TensorStructure(TensorKind::Weight1Tensor, l, c, std::move(product),
                         std::move(product_weil));
}

TensorStructure tensor_sym2(const PolarizedLattice& l, const WeilOperator& c) {
  if (!l.even_weight())
    throw ValidationError("weight parity", "tensor_sym2", "base weight must be even");
  const int n = l.rank();
  QMat gram(3 * n, 3 * n), weil(3 * n, 3 * n);
  put_block(gram, 0, 2, l.gram(), Rational(1));
  put_block(gram, 2, 0, l.gram(), Rational(1));
  put_block(gram, 1, 1, l.gram(), Rational(-1));
  put_block(weil, 0, 2, c.matrix(), Rational(1));
  put_block(weil, 2, 0, c.matrix(), Rational(1));
  put_block(weil, 1, 1, c.matrix(), Rational(-1));
  PolarizedLattice product(2 * l.weight(), std::move(gram));
  WeilOperator product_weil = WeilOperator::from_matrix(product, std::move(weil), "tensor_sym2");
  return TensorStructure(TensorKind::Sym2Tensor, l, c, std::move(product),
                         std::move(product_weil));
}

}  // namespace weil
