#pragma once

#include <string>
#include <vector>

namespace gmlab {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;  // first failure, or a short summary when passing
};

/// Runs the full verification suite over the bundled models: exact spectra,
/// eigenbases, fusion laws, gradings, Miyamoto groups, right ideals, the
/// bilinear form, the intrinsic axioms with reconstruction, closures,
/// equivariance, and the product-identity audit. Everything is exact; each
/// criterion either matches its pinned expected values or reports the first
/// deviation.
std::vector<CriterionResult> run_acceptance(bool parallel = false);

}  // namespace gmlab
