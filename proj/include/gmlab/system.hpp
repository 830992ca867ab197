#pragma once

#include <string>
#include <vector>

#include "gmlab/permutation.hpp"

namespace gmlab {

/// A finite transposition set T with its conjugation action, the whole group
/// data every construction here factors through. conj[i][j] is the index of
/// t_i conjugated by t_j.
struct TranspositionSystem {
  int n = 0;
  int p = 0;  // odd prime: the order of t_i t_j for i != j
  std::vector<std::string> labels;
  std::vector<std::vector<int>> conj;
};

struct ValidationIssue {
  std::string check;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> failures;
  bool ok() const { return failures.empty(); }
};

/// Builds a bundled model or loads "file:<path>".
///   dihedral:<p>       reflections of the dihedral group of order 2p
///   frobenius:<p>,<d>  involutions v.t in (Z_p)^d x <t>, t acting by -1
///   burnside23         the 27-involution exponent-3 model, p = 3
/// File systems are validated and rejected when invalid.
TranspositionSystem construct_model(const std::string& spec);

/// Checks every structural invariant; returns the failure list instead of
/// throwing.
ValidationReport validate_system(const TranspositionSystem& sys);

/// Canonical ordering of I(t_i, t_j): a1 = i, a2 = j, a_{k+1} = conj of
/// a_{k-1} by a_k. Exactly p distinct entries on a valid system.
std::vector<int> dihedral_set(const TranspositionSystem& sys, int i, int j);

/// Partition of T \ {axis} into blocks I(axis, rep) \ {axis}, greedy over
/// representatives in index order.
struct BlockPartition {
  int axis = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<int> representatives;
};
BlockPartition blocks(const TranspositionSystem& sys, int axis);

/// The permutation group generated by all conj(. , a), with its generators.
struct ConjugationGroup {
  bool complete = false;
  std::size_t order = 0;
  std::vector<Permutation> generators;  // one per axis
};
ConjugationGroup conjugation_group(const TranspositionSystem& sys, std::size_t cap = 10000);

}  // namespace gmlab
