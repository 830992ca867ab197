#include "gmlab/algebra.hpp"

#include <algorithm>

namespace gmlab {

GMAlgebra build_algebra(const TranspositionSystem& sys, const FieldSpec& field,
                        const Scalar& eta, bool force) {
  const ValidationReport validity = validate_system(sys);
  if (!validity.ok())
    throw MathError("cannot build over an invalid system: [" + validity.failures[0].check +
                    "] " + validity.failures[0].detail);
  if (eta.field() != field) throw MathError("eta lies outside the requested field");
  if (eta.is_zero() || eta.is_one()) throw MathError("eta must avoid {0,1}");
  if (!force && !good_characteristic(sys.p, eta))
    throw MathError("field has bad characteristic relative to (p, eta); pass force to build anyway");

  GMAlgebra alg{sys, field, eta, {}};
  const Scalar one = Scalar::one(field);
  alg.products.assign(sys.n, std::vector<SparseVector>(sys.n));
  for (int i = 0; i < sys.n; ++i) {
    for (int j = 0; j < sys.n; ++j) {
      SparseVector& prod = alg.products[i][j];
      if (i == j) {
        prod.emplace_back(i, one);
        continue;
      }
      const int conjugate = sys.conj[j][i];  // t_j ^ {t_i}
      for (int x : dihedral_set(sys, i, j))
        prod.emplace_back(x, x == conjugate ? one : eta);
      std::sort(prod.begin(), prod.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
  }
  return alg;
}

ExactVector multiply(const GMAlgebra& alg, const ExactVector& x, const ExactVector& y) {
  const std::size_t n = static_cast<std::size_t>(alg.dim());
  if (x.size() != n || y.size() != n) throw MathError("vector dimension mismatch");
  ExactVector out = zero_vector(alg.field, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar c = x[i] * y[j];
      for (const auto& [k, coeff] : alg.products[i][j]) out[k] += c * coeff;
    }
  }
  return out;
}

ExactMatrix mult_matrix(const GMAlgebra& alg, int axis, Side side) {
  const int n = alg.dim();
  if (axis < 0 || axis >= n) throw std::invalid_argument("axis out of range");
  ExactMatrix m(alg.field, n, n);
  for (int j = 0; j < n; ++j) {
    const SparseVector& image =
        side == Side::Left ? alg.products[axis][j] : alg.products[j][axis];
    for (const auto& [k, coeff] : image) m.at(j, k) = coeff;
  }
  return m;
}

ExactMatrix operator_matrix(const GMAlgebra& alg, int axis, Side side) {
  return mult_matrix(alg, axis, side).transposed();
}

ClosureResult subalgebra_closure(const GMAlgebra& alg, const std::vector<ExactVector>& seeds,
                                 std::size_t cap) {
  if (seeds.empty()) throw std::invalid_argument("closure needs at least one seed");
  for (const auto& s : seeds)
    if (is_zero_vector(s)) throw std::invalid_argument("closure seeds must be nonzero");

  SpanBuilder span(alg.field, alg.dim());
  for (const auto& s : seeds) span.insert(s);
  if (span.dim() > cap) return {span.basis(), false};
  while (true) {
    const std::vector<ExactVector> current = span.basis();
    bool grew = false;
    for (const auto& u : current)
      for (const auto& v : current) {
        grew |= span.insert(multiply(alg, u, v));
        if (span.dim() > cap) return {span.basis(), false};
      }
    if (!grew) break;
  }
  return {span.basis(), true};
}

std::vector<ExactVector> right_ideal_closure(const GMAlgebra& alg, const ExactVector& v) {
  if (is_zero_vector(v)) throw std::invalid_argument("right ideal of the zero vector");
  const std::size_t n = static_cast<std::size_t>(alg.dim());
  SpanBuilder span(alg.field, n);
  span.insert(v);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& w : span.basis())
      for (std::size_t j = 0; j < n; ++j)
        grew |= span.insert(multiply(alg, w, unit_vector(alg.field, n, j)));
  }
  return span.basis();
}

}  // namespace gmlab
