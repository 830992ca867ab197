#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmlab/algebra.hpp"

namespace gmlab {

/// A structure-constant algebra presented without any group data; the input
/// side of the intrinsic verification.
struct AbstractAlgebra {
  FieldSpec field;
  Scalar eta;
  int p = 0;  // inferred from product supports when a file omits it
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVector>> products;
};

/// Serializes a built algebra into its abstract form.
AbstractAlgebra abstract_from(const GMAlgebra& alg);

/// Reads I(i,j) and the conjugate of j by i off the support of one product;
/// valid because eta outside {0,1} forces the coefficient pattern.
struct DihedralRecovery {
  bool ok = false;
  std::vector<int> i_set;  // sorted support
  int b_conj_a = -1;       // the unique unit-coefficient label
  std::string failure;
};

DihedralRecovery recover_dihedral(const AbstractAlgebra& alg, int i, int j);

struct AxiomWitness {
  int axiom;
  std::string detail;
};

struct AxiomReport {
  bool axiom1 = false;  // every basis label idempotent
  bool axiom2 = false;  // every pair spans a canonical dihedral algebra
  bool axiom3 = false;  // the dihedral sets through an axis partition the rest
  bool axiom4 = false;  // b -> b^a extends to an algebra automorphism
  std::vector<AxiomWitness> witnesses;
  std::optional<std::vector<std::vector<int>>> recovered_conj;

  bool all_pass() const { return axiom1 && axiom2 && axiom3 && axiom4; }
};

AxiomReport verify_gm_type(const AbstractAlgebra& alg);

/// Rebuilds the algebra from the recovered conjugation table and compares
/// structure constants entrywise; requires a passing axiom report.
struct ReconstructionRecord {
  bool isomorphic = false;
  std::string first_mismatch;
  bool group_complete = false;
  std::size_t group_order = 0;
};

ReconstructionRecord reconstruct_and_compare(const AbstractAlgebra& alg);

/// One audited closed-form identity or membership claim: the definitional
/// product next to the stated right-hand side.
struct AuditEntry {
  std::string item;   // e.g. "gamma.square", "z.square", "x.axis[i=2]"
  std::string claim;
  bool applicable = true;
  bool match = false;
  ExactVector lhs;  // definitional product (empty for membership entries)
  ExactVector rhs;  // stated value
  std::string detail;
};

struct AuditReport {
  int a = 0, b = 0;
  std::vector<AuditEntry> entries;
  bool all_match() const;
};

/// Evaluates the catalogued product identities of the dihedral block of
/// (a, b) in its canonical eigenbasis. Mismatches are reported, never thrown:
/// the definitional product is the ground truth being compared against.
AuditReport audit_identities(const GMAlgebra& alg, int a, int b);

}  // namespace gmlab
