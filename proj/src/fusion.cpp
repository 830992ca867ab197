#include "gmlab/fusion.hpp"

#include <algorithm>

namespace gmlab {

namespace {

void require_distinct(const std::vector<Scalar>& values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j])
        throw MathError("fusion law values must be pairwise distinct");
}

FusionLaw four_value_law(const Scalar& alpha, const Scalar& beta, bool generalized) {
  const FieldSpec& f = alpha.field();
  const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
  FusionLaw law;
  law.values = {one, zero, alpha, beta};
  require_distinct(law.values);
  law.name = (generalized ? "GM(" : "M(") + alpha.str() + "," + beta.str() + ")";

  // Index key: 0 = 1, 1 = 0, 2 = alpha, 3 = beta.
  const std::vector<int> empty{}, a{2}, b{3}, u{0}, z{1};
  law.table = {
      {u, empty, a, b},
      {empty, generalized ? std::vector<int>{0, 1} : z, a, b},
      {a, a, generalized ? std::vector<int>{0, 1, 2} : std::vector<int>{0, 1}, b},
      {b, b, b, {0, 1, 2}},
  };
  return law;
}

}  // namespace

FusionLaw monster_law(const Scalar& alpha, const Scalar& beta) {
  return four_value_law(alpha, beta, false);
}

FusionLaw generalized_monster_law(const Scalar& alpha, const Scalar& beta) {
  return four_value_law(alpha, beta, true);
}

FusionLaw custom_law(std::vector<Scalar> values,
                     std::vector<std::vector<std::vector<int>>> table, std::string name) {
  require_distinct(values);
  if (table.size() != values.size())
    throw MathError("fusion table shape does not match its value set");
  for (auto& row : table) {
    if (row.size() != values.size())
      throw MathError("fusion table shape does not match its value set");
    for (auto& cell : row) {
      std::sort(cell.begin(), cell.end());
      for (int idx : cell)
        if (idx < 0 || idx >= static_cast<int>(values.size()))
          throw MathError("fusion table cell references a missing value");
    }
  }
  return FusionLaw{std::move(values), std::move(table), std::move(name)};
}

namespace {

/// Exact projection machinery shared by verify_axis and infer_law: the
/// eigenbasis matrix is inverted once, then every product decomposes by one
/// matrix application.
struct Projector {
  const GMAlgebra& alg;
  SpectralDecomposition dec;
  ExactMatrix basis_inverse;
  std::vector<std::size_t> part_offset;

  Projector(const GMAlgebra& a, int axis, Side side) : alg(a), dec(decompose(a, axis, side)) {
    if (!dec.semisimple) return;
    const int n = alg.dim();
    ExactMatrix basis(alg.field, n, n);
    std::size_t col = 0;
    for (const auto& part : dec.parts) {
      part_offset.push_back(col);
      for (const auto& v : part.basis) {
        for (int r = 0; r < n; ++r) basis.at(r, col) = v[r];
        ++col;
      }
    }
    part_offset.push_back(col);
    basis_inverse = inverse(basis);
  }

  /// Indices of decomposition parts with a nonzero component in u*v.
  std::vector<int> support(const ExactVector& u, const ExactVector& v) const {
    const ExactVector coords = basis_inverse.apply(multiply(alg, u, v));
    std::vector<int> parts;
    for (std::size_t k = 0; k + 1 < part_offset.size(); ++k)
      for (std::size_t c = part_offset[k]; c < part_offset[k + 1]; ++c)
        if (!coords[c].is_zero()) {
          parts.push_back(static_cast<int>(k));
          break;
        }
    return parts;
  }
};

}  // namespace

FusionReport verify_axis(const GMAlgebra& alg, int axis, const FusionLaw& law, Side side) {
  FusionReport report;
  report.axis = axis;
  report.side = side;
  report.law_name = law.name;

  const Projector proj(alg, axis, side);
  report.semisimple = proj.dec.semisimple;
  if (!report.semisimple) {
    report.pass = false;
    return report;
  }

  // Spectrum values outside the law break the axis property outright.
  std::vector<int> law_index_of_part(proj.dec.parts.size(), -1);
  for (std::size_t k = 0; k < proj.dec.parts.size(); ++k) {
    const auto& part = proj.dec.parts[k];
    const auto it = std::find(law.values.begin(), law.values.end(), part.value);
    if (it != law.values.end())
      law_index_of_part[k] = static_cast<int>(it - law.values.begin());
    else if (!part.basis.empty())
      report.uncovered.push_back(part.value);
  }

  for (std::size_t ki = 0; ki < proj.dec.parts.size(); ++ki) {
    const auto& pi = proj.dec.parts[ki];
    if (pi.basis.empty()) continue;
    for (std::size_t kj = 0; kj < proj.dec.parts.size(); ++kj) {
      const auto& pj = proj.dec.parts[kj];
      if (pj.basis.empty()) continue;
      // Cells with an uncovered side are already failed through `uncovered`.
      if (law_index_of_part[ki] < 0 || law_index_of_part[kj] < 0) continue;
      const std::vector<int>& allowed =
          law.cell(law_index_of_part[ki], law_index_of_part[kj]);
      for (std::size_t ui = 0; ui < pi.basis.size(); ++ui)
        for (std::size_t vi = 0; vi < pj.basis.size(); ++vi)
          for (int part_k : proj.support(pi.basis[ui], pj.basis[vi])) {
            const Scalar& component = proj.dec.parts[part_k].value;
            const bool ok =
                law_index_of_part[part_k] >= 0 &&
                std::binary_search(allowed.begin(), allowed.end(), law_index_of_part[part_k]);
            if (!ok)
              report.violations.push_back({pi.value, pj.value, static_cast<int>(ui),
                                           static_cast<int>(vi), component});
          }
    }
  }
  report.pass = report.violations.empty() && report.uncovered.empty();
  return report;
}

FusionLaw infer_law(const GMAlgebra& alg, int axis, Side side) {
  const Projector proj(alg, axis, side);
  if (!proj.dec.semisimple)
    throw MathError("cannot infer a fusion law from a non-semisimple operator");

  FusionLaw law;
  law.name = "inferred";
  std::vector<int> part_to_value(proj.dec.parts.size(), -1);
  for (std::size_t k = 0; k < proj.dec.parts.size(); ++k)
    if (!proj.dec.parts[k].basis.empty()) {
      part_to_value[k] = static_cast<int>(law.values.size());
      law.values.push_back(proj.dec.parts[k].value);
    }
  law.table.assign(law.values.size(),
                   std::vector<std::vector<int>>(law.values.size()));

  for (std::size_t ki = 0; ki < proj.dec.parts.size(); ++ki) {
    if (part_to_value[ki] < 0) continue;
    for (std::size_t kj = 0; kj < proj.dec.parts.size(); ++kj) {
      if (part_to_value[kj] < 0) continue;
      std::vector<int>& cell = law.table[part_to_value[ki]][part_to_value[kj]];
      for (const auto& u : proj.dec.parts[ki].basis)
        for (const auto& v : proj.dec.parts[kj].basis)
          for (int part_k : proj.support(u, v)) {
            const int val = part_to_value[part_k];
            if (val >= 0 && !std::binary_search(cell.begin(), cell.end(), val)) {
              cell.push_back(val);
              std::sort(cell.begin(), cell.end());
            }
          }
    }
  }
  return law;
}

MiyamotoResult miyamoto_group(const GMAlgebra& alg, std::size_t cap) {
  const int n = alg.dim();
  MiyamotoResult result;
  bool perms_match = true;
  for (int a = 0; a < n; ++a) {
    const ExactMatrix tau = tau_matrix(alg, a);
    Permutation perm(n, -1);
    for (int b = 0; b < n; ++b) {
      int image = -1;
      for (int r = 0; r < n; ++r) {
        const Scalar& entry = tau.at(r, b);
        if (entry.is_zero()) continue;
        if (image != -1 || !entry.is_one()) {
          image = -2;
          break;
        }
        image = r;
      }
      if (image < 0)
        throw MathError("tau_" + std::to_string(a) + " is not a basis permutation");
      perm[b] = image;
      perms_match &= image == alg.sys.conj[b][a];
    }
    result.taus.push_back(std::move(perm));
  }

  const GroupClosure closure = close_group(result.taus, cap);
  result.complete = closure.complete;
  result.order = closure.order;
  const ConjugationGroup conj = conjugation_group(alg.sys, cap);
  result.conjugation_order = conj.order;
  result.matches_conjugation =
      perms_match && closure.complete && conj.complete && closure.order == conj.order;
  return result;
}

std::vector<EtaScanEntry> monster_eta_scan(const TranspositionSystem& sys, int max_abs) {
  const FieldSpec field = FieldSpec::rationals();
  std::vector<Scalar> etas;
  for (int sign : {1, -1})
    for (int num = 1; num <= max_abs; ++num)
      for (int den = 1; den <= max_abs; ++den) {
        const Scalar eta = Scalar::ratio(sign * num, den, field);
        if (eta.is_zero() || eta.is_one()) continue;
        if (std::find(etas.begin(), etas.end(), eta) == etas.end()) etas.push_back(eta);
      }
  std::sort(etas.begin(), etas.end());

  std::vector<EtaScanEntry> entries;
  for (const Scalar& eta : etas) {
    EtaScanEntry entry;
    entry.eta = eta;
    entry.good_char = good_characteristic(sys.p, eta);
    if (!entry.good_char) {
      entry.note = "bad characteristic";
      entries.push_back(std::move(entry));
      continue;
    }
    const auto [lambda1, lambda2] = lambda_params(sys.p, eta);
    if (!lambda1.is_zero()) {
      // Spectrum {1, lambda1, lambda2, -lambda2} with four distinct values
      // cannot embed into {1, 0, alpha, -alpha} unless lambda1 = 0.
      entry.note = "lambda1 = " + lambda1.str() + " forces a value outside M(a,-a)";
      entries.push_back(std::move(entry));
      continue;
    }
    entry.structurally_possible = true;
    const GMAlgebra alg = build_algebra(sys, field, eta);
    for (const Scalar& alpha : {lambda2, -lambda2}) {
      const FusionLaw law = monster_law(alpha, -alpha);
      bool all_pass = true;
      for (int axis = 0; axis < sys.n && all_pass; ++axis)
        all_pass = verify_axis(alg, axis, law, Side::Left).pass;
      if (all_pass) {
        entry.passes = true;
        entry.note = "passes " + law.name;
        break;
      }
    }
    if (!entry.passes) entry.note = "fusion check fails for both alpha assignments";
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace gmlab
