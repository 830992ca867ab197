#pragma once

#include <utility>
#include <vector>

#include "gmlab/matrix.hpp"
#include "gmlab/system.hpp"

namespace gmlab {

/// One basis product expansion: sorted (basis index, coefficient) pairs.
using SparseVector = std::vector<std::pair<int, Scalar>>;

/// The transposition algebra of a system at parameter eta: basis T with
///   t_i * t_i = t_i
///   t_i * t_j = t_j^{t_i} + eta . (sum over I(t_i,t_j) minus that conjugate)
/// Structure constants are precomputed; each product has support of size p.
struct GMAlgebra {
  TranspositionSystem sys;
  FieldSpec field;
  Scalar eta;
  std::vector<std::vector<SparseVector>> products;

  int dim() const { return sys.n; }
};

/// Precondition: valid system, eta outside {0,1}, and good characteristic
/// unless force is set.
GMAlgebra build_algebra(const TranspositionSystem& sys, const FieldSpec& field,
                        const Scalar& eta, bool force = false);

ExactVector multiply(const GMAlgebra& alg, const ExactVector& x, const ExactVector& y);

enum class Side { Left, Right };

/// Matrix of L_a (x -> a*x) or R_a (x -> x*a) with row j holding the
/// coordinates of the image of e_j; in the canonical dihedral ordering the
/// left matrix is the classical display (1,0,...,0), (eta,...,eta,1), ...
/// The operator acts on column vectors through the transpose.
ExactMatrix mult_matrix(const GMAlgebra& alg, int axis, Side side);

/// Operator form of mult_matrix (column convention).
ExactMatrix operator_matrix(const GMAlgebra& alg, int axis, Side side);

struct ClosureResult {
  std::vector<ExactVector> basis;
  bool closed = false;  // false when the dimension cap stopped the iteration
};

/// Smallest subspace containing the seeds and closed under the product; full
/// bilinear closure each round until the dimension stabilizes.
ClosureResult subalgebra_closure(const GMAlgebra& alg, const std::vector<ExactVector>& seeds,
                                 std::size_t cap);

/// Smallest subspace containing v and stable under right multiplication by
/// every basis element.
std::vector<ExactVector> right_ideal_closure(const GMAlgebra& alg, const ExactVector& v);

}  // namespace gmlab
