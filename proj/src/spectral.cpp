#include "gmlab/spectral.hpp"

#include <algorithm>

namespace gmlab {

const EigenPart* SpectralDecomposition::part(const Scalar& value) const {
  for (const auto& p : parts)
    if (p.value == value) return &p;
  return nullptr;
}

std::size_t SpectralDecomposition::total_dim() const {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.basis.size();
  return total;
}

namespace {

std::vector<Scalar> dedup_in_order(std::vector<Scalar> values) {
  std::vector<Scalar> out;
  for (const auto& v : values)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

bool is_eigenvector(const ExactMatrix& op, const ExactVector& v, const Scalar& lambda) {
  return op.apply(v) == scale(lambda, v);
}

/// Assembles the left eigenbasis per block from the canonical dihedral
/// vectors; returns false when a vector fails verification or the joint rank
/// falls short, in which case the caller recomputes through kernels.
bool blockwise_left_parts(const GMAlgebra& alg, int axis, const ExactMatrix& op,
                          SpectralDecomposition& dec) {
  const auto [lambda1, lambda2] = lambda_params(alg.sys.p, alg.eta);
  const Scalar one = Scalar::one(alg.field);

  auto bucket = [&](const Scalar& value) -> std::vector<ExactVector>& {
    for (auto& p : dec.parts)
      if (p.value == value) return p.basis;
    throw MathError("internal: missing eigenvalue bucket");
  };

  auto push_verified = [&](const Scalar& value, ExactVector v) {
    if (!is_eigenvector(op, v, value)) return false;
    bucket(value).push_back(std::move(v));
    return true;
  };

  if (!push_verified(one, unit_vector(alg.field, alg.dim(), axis))) return false;
  for (int rep : blocks(alg.sys, axis).representatives) {
    CanonicalEigenbasis ceb;
    try {
      ceb = canonical_eigenbasis(alg, axis, rep);
    } catch (const MathError&) {
      return false;  // p-2 not invertible in this field
    }
    if (!push_verified(lambda1, ceb.z)) return false;
    for (auto& y : ceb.ys)
      if (!push_verified(lambda2, std::move(y))) return false;
    for (auto& x : ceb.xs)
      if (!push_verified(-lambda2, std::move(x))) return false;
  }

  std::vector<ExactVector> all;
  for (const auto& p : dec.parts) all.insert(all.end(), p.basis.begin(), p.basis.end());
  return span_basis(all).size() == static_cast<std::size_t>(alg.dim());
}

}  // namespace

SpectralDecomposition decompose(const GMAlgebra& alg, int axis, Side side) {
  const int n = alg.dim();
  if (axis < 0 || axis >= n) throw std::invalid_argument("axis out of range");
  const auto [lambda1, lambda2] = lambda_params(alg.sys.p, alg.eta);
  const Scalar one = Scalar::one(alg.field);
  const Scalar minus_lambda2 = -lambda2;

  std::vector<Scalar> candidates;
  if (side == Side::Left) {
    candidates = {one, lambda1, lambda2, minus_lambda2};
  } else {
    candidates = {one, lambda1, minus_lambda2};
    for (const Scalar& d : roots_of_minus_one(alg.field, (alg.sys.p - 1) / 2))
      candidates.push_back(d * minus_lambda2);
  }
  candidates = dedup_in_order(candidates);

  SpectralDecomposition dec;
  dec.axis = axis;
  dec.side = side;
  for (const auto& c : candidates) dec.parts.push_back({c, {}});

  const ExactMatrix op = operator_matrix(alg, axis, side);
  bool assembled = false;
  if (side == Side::Left) {
    assembled = blockwise_left_parts(alg, axis, op, dec);
    if (!assembled)
      for (auto& p : dec.parts) p.basis.clear();
  }
  if (!assembled)
    for (auto& p : dec.parts) p.basis = eigenspace(op, p.value);

  dec.deficit = n - static_cast<int>(dec.total_dim());
  dec.semisimple = dec.deficit == 0;
  const EigenPart* unit_part = dec.part(one);
  dec.primitive = unit_part && unit_part->basis.size() == 1;
  return dec;
}

CanonicalEigenbasis canonical_eigenbasis(const GMAlgebra& alg, int a, int b) {
  if (a == b) throw std::invalid_argument("canonical eigenbasis needs two distinct indices");
  const int p = alg.sys.p;
  const int n = alg.dim();
  const FieldSpec& f = alg.field;
  const Scalar one = Scalar::one(f);

  CanonicalEigenbasis ceb;
  ceb.order = dihedral_set(alg.sys, a, b);
  ceb.axis_vec = unit_vector(f, n, a);

  ceb.z = zero_vector(f, n);
  ceb.z[ceb.order[0]] = Scalar::ratio(p - 1, p - 2, f);
  for (int k = 1; k < p; ++k) ceb.z[ceb.order[k]] = one;

  for (int i = 1; i <= (p - 3) / 2; ++i) {
    ExactVector y = zero_vector(f, n);
    y[ceb.order[i]] = one;
    y[ceb.order[(p - 1) / 2]] = -one;
    y[ceb.order[(p + 1) / 2]] = -one;
    y[ceb.order[p - i]] = one;
    ceb.ys.push_back(std::move(y));
  }
  for (int i = 1; i <= (p - 1) / 2; ++i) {
    ExactVector x = zero_vector(f, n);
    x[ceb.order[i]] = -one;
    x[ceb.order[p - i]] = one;
    ceb.xs.push_back(std::move(x));
  }
  return ceb;
}

GradedSplit plus_minus_split(const GMAlgebra& alg, int axis) {
  const SpectralDecomposition dec = decompose(alg, axis, Side::Left);
  if (!dec.semisimple)
    throw MathError("left operator is not semisimple; the split is undefined");
  const auto [lambda1, lambda2] = lambda_params(alg.sys.p, alg.eta);
  const Scalar one = Scalar::one(alg.field);
  const Scalar minus_lambda2 = -lambda2;
  if (minus_lambda2 == one || minus_lambda2 == lambda1 || minus_lambda2 == lambda2)
    throw MathError("eigenvalues coincide; the split is undefined");

  GradedSplit split;
  split.axis = axis;
  for (const auto& part : dec.parts) {
    auto& side = part.value == minus_lambda2 ? split.minus : split.plus;
    side.insert(side.end(), part.basis.begin(), part.basis.end());
  }
  return split;
}

ExactMatrix tau_matrix(const GMAlgebra& alg, int axis) {
  const GradedSplit split = plus_minus_split(alg, axis);
  const int n = alg.dim();
  ExactMatrix s(alg.field, n, n);
  ExactMatrix sd(alg.field, n, n);
  std::size_t col = 0;
  for (const auto& v : split.plus) {
    for (int r = 0; r < n; ++r) {
      s.at(r, col) = v[r];
      sd.at(r, col) = v[r];
    }
    ++col;
  }
  for (const auto& v : split.minus) {
    for (int r = 0; r < n; ++r) {
      s.at(r, col) = v[r];
      sd.at(r, col) = -v[r];
    }
    ++col;
  }
  return sd * inverse(s);
}

}  // namespace gmlab
