#include "gmlab/forms.hpp"

namespace gmlab {

namespace {

ExactMatrix gram_matrix(const GMAlgebra& alg) {
  const int n = alg.dim();
  ExactMatrix m(alg.field, n, n);
  const Scalar one = Scalar::one(alg.field);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = i == j ? one : alg.eta;
  return m;
}

}  // namespace

GramData gram(const GMAlgebra& alg) {
  GramData data{gram_matrix(alg), {}, Scalar::zero(alg.field)};
  data.radical_basis = kernel(data.matrix);
  data.determinant = determinant(data.matrix);

  // Rank-one update identity for eta J + (1-eta) I; a failure here would mean
  // the elimination itself is broken.
  const Scalar one = Scalar::one(alg.field);
  const Scalar n_minus_1 = Scalar::of_int(alg.dim() - 1, alg.field);
  const Scalar closed_form =
      (one - alg.eta).pow(alg.dim() - 1) * (one + n_minus_1 * alg.eta);
  if (data.determinant != closed_form)
    throw MathError("Gram determinant deviates from its closed form");
  return data;
}

Scalar form_value(const GMAlgebra& alg, const ExactVector& x, const ExactVector& y) {
  const std::size_t n = static_cast<std::size_t>(alg.dim());
  if (x.size() != n || y.size() != n) throw MathError("vector dimension mismatch");
  // (x,y) = (1-eta) <x,y> + eta (sum x)(sum y)
  Scalar dot = Scalar::zero(alg.field);
  Scalar sx = Scalar::zero(alg.field);
  Scalar sy = Scalar::zero(alg.field);
  for (std::size_t i = 0; i < n; ++i) {
    dot += x[i] * y[i];
    sx += x[i];
    sy += y[i];
  }
  return (Scalar::one(alg.field) - alg.eta) * dot + alg.eta * sx * sy;
}

std::vector<FrobeniusViolation> frobenius_defect(const GMAlgebra& alg) {
  const int n = alg.dim();
  std::vector<FrobeniusViolation> violations;
  auto sparse_form_with_unit = [&](const SparseVector& prod, int c) {
    // (prod, e_c) over the Gram matrix.
    Scalar total = Scalar::zero(alg.field);
    for (const auto& [k, coeff] : prod)
      total += coeff * (k == c ? Scalar::one(alg.field) : alg.eta);
    return total;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const Scalar left = sparse_form_with_unit(alg.products[a][b], c);
        const Scalar right = sparse_form_with_unit(alg.products[a][c], b);
        if (left != right) violations.push_back({a, b, c, left, right});
      }
  return violations;
}

std::vector<ExactVector> radical(const GMAlgebra& alg) { return kernel(gram_matrix(alg)); }

}  // namespace gmlab
