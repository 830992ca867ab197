#pragma once

#include <vector>

#include "gmlab/algebra.hpp"

namespace gmlab {

/// The symmetric bilinear form with (a,a) = 1 and (a,b) = eta on distinct
/// basis elements, i.e. Gram matrix (1-eta) I + eta J.
struct GramData {
  ExactMatrix matrix;
  std::vector<ExactVector> radical_basis;
  Scalar determinant;  // equals (1-eta)^(n-1) (1+(n-1) eta)
};

GramData gram(const GMAlgebra& alg);

/// Value of the form on coordinate vectors.
Scalar form_value(const GMAlgebra& alg, const ExactVector& x, const ExactVector& y);

struct FrobeniusViolation {
  int a, b, c;
  Scalar left_value;   // (a*b, c)
  Scalar right_value;  // (b, a*c)
};

/// All basis triples with (a*b, c) != (b, a*c). An empty list certifies the
/// left Frobenius property, since both sides are bilinear in each slot.
std::vector<FrobeniusViolation> frobenius_defect(const GMAlgebra& alg);

/// Kernel of the Gram matrix.
std::vector<ExactVector> radical(const GMAlgebra& alg);

}  // namespace gmlab
