#pragma once

#include <string>
#include <vector>

#include "gmlab/spectral.hpp"

namespace gmlab {

/// A finite eigenvalue set with a table assigning to each ordered pair the
/// set of eigenvalues allowed in products of the corresponding eigenvectors.
struct FusionLaw {
  std::vector<Scalar> values;
  std::vector<std::vector<std::vector<int>>> table;  // sorted indices into values
  std::string name;

  const std::vector<int>& cell(int i, int j) const { return table[i][j]; }
};

/// Monster table on values (1, 0, alpha, beta):
///   0*0 = {0}, alpha*alpha = {1,0}, beta*beta = {1,0,alpha}, 1*0 empty,
///   mixed cells as usual. Values must be pairwise distinct.
FusionLaw monster_law(const Scalar& alpha, const Scalar& beta);

/// Same with 0*0 = {0,1} and alpha*alpha = {1,0,alpha}.
FusionLaw generalized_monster_law(const Scalar& alpha, const Scalar& beta);

FusionLaw custom_law(std::vector<Scalar> values,
                     std::vector<std::vector<std::vector<int>>> table, std::string name);

struct FusionViolation {
  Scalar mu, nu;        // the cell
  int u_index, v_index; // witness pair, indices into the two eigenbases
  Scalar offending;     // eigenvalue of the component outside the cell
};

struct FusionReport {
  int axis = 0;
  Side side = Side::Left;
  std::string law_name;
  bool semisimple = false;
  bool pass = false;
  std::vector<FusionViolation> violations;
  std::vector<Scalar> uncovered;  // spectrum values missing from the law
};

/// Checks every eigenbasis pair of every cell by exact projection onto the
/// eigenbasis; bilinearity makes basis pairs exhaustive, so an empty
/// violation list is a proof, not a sample.
FusionReport verify_axis(const GMAlgebra& alg, int axis, const FusionLaw& law, Side side);

/// The minimal law the axis satisfies: each cell is the exact projection
/// support over all witness pairs.
FusionLaw infer_law(const GMAlgebra& alg, int axis, Side side);

struct MiyamotoResult {
  bool complete = false;
  std::size_t order = 0;
  std::vector<Permutation> taus;  // basis permutation of tau_a, per axis
  bool matches_conjugation = false;
  std::size_t conjugation_order = 0;
};

/// Extracts every tau_a as a basis permutation, closes the generated group,
/// and compares it with the conjugation image.
MiyamotoResult miyamoto_group(const GMAlgebra& alg, std::size_t cap = 10000);

struct EtaScanEntry {
  Scalar eta;
  bool good_char = false;
  bool structurally_possible = false;  // spectrum fits {1, 0, alpha, -alpha}
  bool passes = false;
  std::string note;
};

/// Bounded rational scan over eta = +-num/den (1 <= num, den <= max_abs) of
/// whether some Monster law M(alpha, -alpha) can hold on the system's algebra
/// over Q. Spectrum inclusion forces lambda1 = 0, so only eta = -1/(p-2) can
/// survive to an actual fusion check.
std::vector<EtaScanEntry> monster_eta_scan(const TranspositionSystem& sys, int max_abs = 9);

}  // namespace gmlab
