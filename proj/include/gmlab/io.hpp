#pragma once

#include <string>

#include <json.hpp>

#include "gmlab/axioms.hpp"
#include "gmlab/forms.hpp"
#include "gmlab/fusion.hpp"
#include "gmlab/system.hpp"

namespace gmlab {

using Json = nlohmann::ordered_json;

// --- transposition systems: {"p": 5, "labels": [...], "conj": [[...], ...]} ---
Json system_to_json(const TranspositionSystem& sys);
TranspositionSystem system_from_json(const Json& j);  // shape errors only; not validated
TranspositionSystem load_system_file(const std::string& path);  // validated

// --- algebra files: {"field":"Q","eta":"-1/3","system":{...}} ---
Json algebra_to_json(const GMAlgebra& alg);
GMAlgebra algebra_from_json(const Json& j);
GMAlgebra load_algebra_file(const std::string& path);

// --- abstract structure-constant files:
//     {"field":"Q","eta":"-1/3","p":5,"dim":n,"labels":[...],
//      "products":[[i,j,[[k,"c"],...]],...]}
//     "p" and "labels" may be absent on input; p is then inferred from the
//     support size of the first off-diagonal product. ---
Json abstract_to_json(const AbstractAlgebra& alg);
AbstractAlgebra abstract_from_json(const Json& j);

/// Loads either an abstract file or an algebra file (recognized by its
/// "system" key), serializing the latter.
AbstractAlgebra load_abstract_file(const std::string& path);

// --- report fragments, all deterministic for fixed inputs ---
Json validation_to_json(const ValidationReport& report);
Json decomposition_to_json(const SpectralDecomposition& dec);
Json law_to_json(const FusionLaw& law);
Json fusion_report_to_json(const FusionReport& report);
Json miyamoto_to_json(const MiyamotoResult& result);
Json gram_to_json(const GramData& data);
Json frobenius_to_json(const std::vector<FrobeniusViolation>& violations);
Json closure_to_json(const ClosureResult& closure);
Json basis_to_json(const std::vector<ExactVector>& basis);
Json axiom_report_to_json(const AxiomReport& report);
Json reconstruction_to_json(const ReconstructionRecord& record);
Json audit_to_json(const AuditReport& report);
Json eta_scan_to_json(const std::vector<EtaScanEntry>& entries);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// FNV-1a 64-bit digest, stable across platforms; used for input echoes.
std::string fnv1a_digest(const std::string& data);

}  // namespace gmlab
