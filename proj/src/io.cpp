#include "gmlab/io.hpp"

#include <fstream>
#include <sstream>

namespace gmlab {

namespace {

Json scalar_vector_to_json(const ExactVector& v) {
  Json arr = Json::array();
  for (const auto& s : v) arr.push_back(s.str());
  return arr;
}

const Json& require_key(const Json& j, const std::string& key) {
  if (!j.contains(key)) throw ParseError("missing key '" + key + "'");
  return j.at(key);
}

}  // namespace

Json system_to_json(const TranspositionSystem& sys) {
  Json j;
  j["p"] = sys.p;
  j["labels"] = sys.labels;
  j["conj"] = sys.conj;
  return j;
}

TranspositionSystem system_from_json(const Json& j) {
  TranspositionSystem sys;
  try {
    sys.p = require_key(j, "p").get<int>();
    sys.conj = require_key(j, "conj").get<std::vector<std::vector<int>>>();
    sys.n = static_cast<int>(sys.conj.size());
    if (j.contains("labels"))
      sys.labels = j.at("labels").get<std::vector<std::string>>();
    else
      for (int i = 0; i < sys.n; ++i) sys.labels.push_back("t" + std::to_string(i));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad system JSON: ") + e.what());
  }
  return sys;
}

TranspositionSystem load_system_file(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("cannot parse '" + path + "': " + e.what());
  }
  TranspositionSystem sys = system_from_json(j);
  const ValidationReport report = validate_system(sys);
  if (!report.ok())
    throw MathError("system in '" + path + "' is invalid: [" + report.failures[0].check +
                    "] " + report.failures[0].detail);
  return sys;
}

Json algebra_to_json(const GMAlgebra& alg) {
  Json j;
  j["field"] = alg.field.str();
  j["eta"] = alg.eta.str();
  // A built algebra in bad characteristic can only have come through the
  // force gate; mark the file so it loads back.
  if (!good_characteristic(alg.sys.p, alg.eta)) j["force"] = true;
  j["system"] = system_to_json(alg.sys);
  return j;
}

GMAlgebra algebra_from_json(const Json& j) {
  const FieldSpec field = FieldSpec::parse(require_key(j, "field").get<std::string>());
  const Scalar eta = parse_scalar(require_key(j, "eta").get<std::string>(), field);
  const TranspositionSystem sys = system_from_json(require_key(j, "system"));
  const ValidationReport report = validate_system(sys);
  if (!report.ok())
    throw MathError("algebra file carries an invalid system: [" +
                    report.failures[0].check + "] " + report.failures[0].detail);
  const bool force = j.value("force", false);
  return build_algebra(sys, field, eta, force);
}

GMAlgebra load_algebra_file(const std::string& path) {
  try {
    return algebra_from_json(Json::parse(read_text_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("cannot parse '" + path + "': " + e.what());
  }
}

Json abstract_to_json(const AbstractAlgebra& alg) {
  Json j;
  j["field"] = alg.field.str();
  j["eta"] = alg.eta.str();
  j["p"] = alg.p;
  j["dim"] = alg.dim;
  j["labels"] = alg.labels;
  Json products = Json::array();
  for (int i = 0; i < alg.dim; ++i)
    for (int k = 0; k < alg.dim; ++k) {
      Json expansion = Json::array();
      for (const auto& [idx, coeff] : alg.products[i][k])
        expansion.push_back(Json::array({idx, coeff.str()}));
      products.push_back(Json::array({i, k, expansion}));
    }
  j["products"] = std::move(products);
  return j;
}

AbstractAlgebra abstract_from_json(const Json& j) {
  AbstractAlgebra alg;
  alg.field = FieldSpec::parse(require_key(j, "field").get<std::string>());
  alg.eta = parse_scalar(require_key(j, "eta").get<std::string>(), alg.field);
  alg.dim = require_key(j, "dim").get<int>();
  if (alg.dim < 2) throw ParseError("abstract algebra needs dimension >= 2");
  if (j.contains("labels"))
    alg.labels = j.at("labels").get<std::vector<std::string>>();
  else
    for (int i = 0; i < alg.dim; ++i) alg.labels.push_back("t" + std::to_string(i));

  alg.products.assign(alg.dim, std::vector<SparseVector>(alg.dim));
  std::vector<std::vector<bool>> seen(alg.dim, std::vector<bool>(alg.dim, false));
  for (const Json& entry : require_key(j, "products")) {
    if (!entry.is_array() || entry.size() != 3) throw ParseError("bad product entry");
    const int i = entry.at(0).get<int>();
    const int k = entry.at(1).get<int>();
    if (i < 0 || i >= alg.dim || k < 0 || k >= alg.dim)
      throw ParseError("product entry indices out of range");
    if (seen[i][k]) throw ParseError("duplicate product entry");
    seen[i][k] = true;
    SparseVector expansion;
    for (const Json& term : entry.at(2)) {
      if (!term.is_array() || term.size() != 2) throw ParseError("bad product term");
      const int idx = term.at(0).get<int>();
      if (idx < 0 || idx >= alg.dim) throw ParseError("product term index out of range");
      const Scalar coeff = parse_scalar(term.at(1).get<std::string>(), alg.field);
      if (!coeff.is_zero()) expansion.emplace_back(idx, coeff);
    }
    std::sort(expansion.begin(), expansion.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t t = 1; t < expansion.size(); ++t)
      if (expansion[t].first == expansion[t - 1].first)
        throw ParseError("repeated index inside a product expansion");
    alg.products[i][k] = std::move(expansion);
  }
  for (int i = 0; i < alg.dim; ++i)
    for (int k = 0; k < alg.dim; ++k)
      if (!seen[i][k])
        throw ParseError("product table is not total: missing (" + std::to_string(i) +
                         "," + std::to_string(k) + ")");

  if (j.contains("p")) {
    alg.p = j.at("p").get<int>();
  } else {
    // Infer p from the support of the first off-diagonal product.
    alg.p = static_cast<int>(alg.products[0][1].size());
  }
  if (alg.p < 3 || !is_prime(static_cast<std::uint64_t>(alg.p)))
    throw ParseError("abstract algebra has p = " + std::to_string(alg.p) +
                     ", not an odd prime");
  return alg;
}

AbstractAlgebra load_abstract_file(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("cannot parse '" + path + "': " + e.what());
  }
  if (j.contains("system")) return abstract_from(algebra_from_json(j));
  return abstract_from_json(j);
}

Json validation_to_json(const ValidationReport& report) {
  Json j;
  j["ok"] = report.ok();
  Json failures = Json::array();
  for (const auto& f : report.failures)
    failures.push_back(Json{{"check", f.check}, {"detail", f.detail}});
  j["failures"] = std::move(failures);
  return j;
}

Json decomposition_to_json(const SpectralDecomposition& dec) {
  Json j;
  j["axis"] = dec.axis;
  j["side"] = dec.side == Side::Left ? "left" : "right";
  Json parts = Json::array();
  for (const auto& part : dec.parts) {
    Json p;
    p["eigenvalue"] = part.value.str();
    p["dim"] = part.basis.size();
    Json basis = Json::array();
    for (const auto& v : part.basis) basis.push_back(scalar_vector_to_json(v));
    p["basis"] = std::move(basis);
    parts.push_back(std::move(p));
  }
  j["parts"] = std::move(parts);
  j["semisimple"] = dec.semisimple;
  j["primitive"] = dec.primitive;
  j["deficit"] = dec.deficit;
  return j;
}

Json law_to_json(const FusionLaw& law) {
  Json j;
  j["name"] = law.name;
  Json values = Json::array();
  for (const auto& v : law.values) values.push_back(v.str());
  j["values"] = std::move(values);
  Json table = Json::array();
  for (std::size_t i = 0; i < law.values.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < law.values.size(); ++k) {
      Json cell = Json::array();
      for (int idx : law.table[i][k]) cell.push_back(law.values[idx].str());
      row.push_back(std::move(cell));
    }
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

Json fusion_report_to_json(const FusionReport& report) {
  Json j;
  j["axis"] = report.axis;
  j["side"] = report.side == Side::Left ? "left" : "right";
  j["law"] = report.law_name;
  j["semisimple"] = report.semisimple;
  j["pass"] = report.pass;
  Json uncovered = Json::array();
  for (const auto& v : report.uncovered) uncovered.push_back(v.str());
  j["uncovered_eigenvalues"] = std::move(uncovered);
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back(Json{{"mu", v.mu.str()},
                              {"nu", v.nu.str()},
                              {"witness", Json::array({v.u_index, v.v_index})},
                              {"offending", v.offending.str()}});
  j["violations"] = std::move(violations);
  return j;
}

Json miyamoto_to_json(const MiyamotoResult& result) {
  Json j;
  j["complete"] = result.complete;
  j["order"] = result.order;
  j["matches_conjugation"] = result.matches_conjugation;
  j["conjugation_order"] = result.conjugation_order;
  j["generators"] = result.taus;
  return j;
}

Json gram_to_json(const GramData& data) {
  Json j;
  j["determinant"] = data.determinant.str();
  j["radical_dim"] = data.radical_basis.size();
  Json basis = Json::array();
  for (const auto& v : data.radical_basis) basis.push_back(scalar_vector_to_json(v));
  j["radical_basis"] = std::move(basis);
  return j;
}

Json frobenius_to_json(const std::vector<FrobeniusViolation>& violations) {
  Json j;
  j["left_frobenius"] = violations.empty();
  j["defect_count"] = violations.size();
  Json list = Json::array();
  for (const auto& v : violations)
    list.push_back(Json{{"triple", Json::array({v.a, v.b, v.c})},
                        {"left", v.left_value.str()},
                        {"right", v.right_value.str()}});
  j["defects"] = std::move(list);
  return j;
}

Json basis_to_json(const std::vector<ExactVector>& basis) {
  Json arr = Json::array();
  for (const auto& v : basis) arr.push_back(scalar_vector_to_json(v));
  return arr;
}

Json closure_to_json(const ClosureResult& closure) {
  Json j;
  j["dim"] = closure.basis.size();
  j["closed"] = closure.closed;
  j["basis"] = basis_to_json(closure.basis);
  return j;
}

Json axiom_report_to_json(const AxiomReport& report) {
  Json j;
  j["axiom1"] = report.axiom1;
  j["axiom2"] = report.axiom2;
  j["axiom3"] = report.axiom3;
  j["axiom4"] = report.axiom4;
  j["pass"] = report.all_pass();
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses)
    witnesses.push_back(Json{{"axiom", w.axiom}, {"detail", w.detail}});
  j["witnesses"] = std::move(witnesses);
  if (report.recovered_conj) j["recovered_conj"] = *report.recovered_conj;
  return j;
}

Json reconstruction_to_json(const ReconstructionRecord& record) {
  Json j;
  j["isomorphic"] = record.isomorphic;
  if (!record.first_mismatch.empty()) j["first_mismatch"] = record.first_mismatch;
  j["group_order"] = record.group_order;
  j["group_complete"] = record.group_complete;
  return j;
}

Json audit_to_json(const AuditReport& report) {
  Json j;
  j["a"] = report.a;
  j["b"] = report.b;
  j["all_match"] = report.all_match();
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json entry;
    entry["item"] = e.item;
    entry["claim"] = e.claim;
    entry["applicable"] = e.applicable;
    entry["match"] = e.match;
    if (!e.lhs.empty()) entry["definitional"] = scalar_vector_to_json(e.lhs);
    if (!e.rhs.empty()) entry["stated"] = scalar_vector_to_json(e.rhs);
    if (!e.detail.empty()) entry["detail"] = e.detail;
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json eta_scan_to_json(const std::vector<EtaScanEntry>& entries) {
  Json arr = Json::array();
  for (const auto& e : entries)
    arr.push_back(Json{{"eta", e.eta.str()},
                       {"good_characteristic", e.good_char},
                       {"structurally_possible", e.structurally_possible},
                       {"passes", e.passes},
                       {"note", e.note}});
  Json j;
  j["any_pass"] = std::any_of(entries.begin(), entries.end(),
                              [](const EtaScanEntry& e) { return e.passes; });
  j["entries"] = std::move(arr);
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

std::string fnv1a_digest(const std::string& data) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace gmlab
