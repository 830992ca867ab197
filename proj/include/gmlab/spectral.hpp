#pragma once

#include <vector>

#include "gmlab/algebra.hpp"

namespace gmlab {

struct EigenPart {
  Scalar value;
  std::vector<ExactVector> basis;
};

/// Exact eigen-decomposition of L_axis or R_axis. Candidate eigenvalues come
/// from closed forms; completeness is certified by the dimension count, never
/// by factoring a characteristic polynomial. Parts appear in candidate order
/// and empty candidates are kept with empty bases, so multiplicity assertions
/// can address them.
struct SpectralDecomposition {
  int axis = 0;
  Side side = Side::Left;
  std::vector<EigenPart> parts;
  bool semisimple = false;
  bool primitive = false;
  int deficit = 0;  // dim(A) minus the sum of eigenspace dimensions

  const EigenPart* part(const Scalar& value) const;
  std::size_t total_dim() const;
};

SpectralDecomposition decompose(const GMAlgebra& alg, int axis, Side side);

/// The classical eigenbasis of the dihedral block of (a,b), coordinates
/// placed along the canonical order of I(a,b):
///   axis_vec = e_a                              eigenvalue 1
///   z        = (p-1)/(p-2) at a, 1 elsewhere    eigenvalue eta(p-2)+1
///   y_i      = +1, -1 at the two middle slots, +1   eigenvalue 1-eta
///   x_i      = -1 at slot i, +1 at slot p-i     eigenvalue eta-1
struct CanonicalEigenbasis {
  std::vector<int> order;  // dihedral_set(a, b)
  ExactVector axis_vec;
  ExactVector z;
  std::vector<ExactVector> ys;  // (p-3)/2 vectors
  std::vector<ExactVector> xs;  // (p-1)/2 vectors
};

CanonicalEigenbasis canonical_eigenbasis(const GMAlgebra& alg, int a, int b);

/// The split A = A+ (eigenvalues 1, eta(p-2)+1, 1-eta) + A- (eigenvalue
/// eta-1) of the left decomposition; requires a semisimple left operator.
struct GradedSplit {
  int axis = 0;
  std::vector<ExactVector> plus;
  std::vector<ExactVector> minus;
};

GradedSplit plus_minus_split(const GMAlgebra& alg, int axis);

/// The reflection fixing A+ and negating A-; on these algebras it is the
/// basis permutation e_b -> e_{b^a} and an algebra automorphism.
ExactMatrix tau_matrix(const GMAlgebra& alg, int axis);

}  // namespace gmlab
