#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gmlab/acceptance.hpp"
#include "gmlab/io.hpp"

namespace {

using gmlab::Json;

constexpr const char* kToolVersion = "gmlab 0.1.0";

struct CommonOptions {
  std::string input_file;  // positional algebra/system file
  std::string model;
  std::string field = "Q";
  std::string eta;
  bool force = false;
  std::string out;
  std::string format = "json";
};

void add_output_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--out", opts.out, "write the report (or file) here instead of stdout");
  cmd->add_option("--format", opts.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
}

void add_algebra_source(CLI::App* cmd, CommonOptions& opts, bool with_file = true) {
  if (with_file)
    cmd->add_option("input", opts.input_file, "algebra JSON file (alternative to --model)");
  cmd->add_option("--model", opts.model,
                  "dihedral:<p> | frobenius:<p>,<d> | burnside23 | file:<path>");
  cmd->add_option("--field", opts.field, "Q | F:<q>");
  cmd->add_option("--eta", opts.eta, "structure parameter, e.g. -1/3");
  cmd->add_flag("--force", opts.force, "build even in bad characteristic");
}

gmlab::GMAlgebra resolve_algebra(const CommonOptions& opts, std::string& digest_payload) {
  if (!opts.input_file.empty()) {
    const std::string content = gmlab::read_text_file(opts.input_file);
    digest_payload += content;
    Json j;
    try {
      j = Json::parse(content);
    } catch (const nlohmann::json::exception& e) {
      throw gmlab::ParseError("cannot parse '" + opts.input_file + "': " + e.what());
    }
    if (opts.force) j["force"] = true;
    return gmlab::algebra_from_json(j);
  }
  if (opts.model.empty() || opts.eta.empty())
    throw gmlab::ParseError("need either an algebra file or --model together with --eta");
  digest_payload += opts.model + "|" + opts.field + "|" + opts.eta;
  const gmlab::TranspositionSystem sys = gmlab::construct_model(opts.model);
  const gmlab::FieldSpec field = gmlab::FieldSpec::parse(opts.field);
  return gmlab::build_algebra(sys, field, gmlab::parse_scalar(opts.eta, field), opts.force);
}

gmlab::Side parse_side(const std::string& side) {
  if (side == "left") return gmlab::Side::Left;
  if (side == "right") return gmlab::Side::Right;
  throw gmlab::ParseError("bad side '" + side + "' (expected left or right)");
}

void render_text(std::ostream& os, const Json& value, const std::string& prefix) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) {
      const std::string path = prefix.empty() ? key : prefix + "." + key;
      if (child.is_object() || child.is_array())
        render_text(os, child, path);
      else
        os << path << " = " << child.dump() << "\n";
    }
  } else if (value.is_array()) {
    if (value.empty()) {
      os << prefix << " = []\n";
      return;
    }
    const bool scalar_items =
        std::all_of(value.begin(), value.end(),
                    [](const Json& item) { return !item.is_object() && !item.is_array(); });
    if (scalar_items) {
      os << prefix << " = " << value.dump() << "\n";
    } else {
      std::size_t index = 0;
      for (const Json& item : value)
        render_text(os, item, prefix + "[" + std::to_string(index++) + "]");
    }
  } else {
    os << prefix << " = " << value.dump() << "\n";
  }
}

/// Deterministic report envelope; timing goes to stderr so that two runs on
/// identical inputs emit byte-identical reports.
int emit_report(const CommonOptions& opts, const std::string& verb, const Json& command_echo,
                const std::string& digest_payload, const Json& results, bool pass) {
  Json report;
  report["tool"] = kToolVersion;
  report["command"] = command_echo;
  report["inputs_digest"] = gmlab::fnv1a_digest(digest_payload);
  report["results"] = results;
  report["pass"] = pass;

  std::string payload;
  if (opts.format == "json") {
    payload = report.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "tool: " << kToolVersion << "\n" << "verb: " << verb << "\n";
    os << "inputs_digest: " << report["inputs_digest"].get<std::string>() << "\n";
    render_text(os, results, "");
    os << "pass: " << (pass ? "true" : "false") << "\n";
    payload = os.str();
  }
  if (opts.out.empty())
    std::cout << payload;
  else
    gmlab::write_text_file(opts.out, payload);
  return pass ? 0 : 1;
}

Json echo(const std::string& verb, std::initializer_list<std::pair<std::string, Json>> args) {
  Json j;
  j["verb"] = verb;
  for (const auto& [key, value] : args)
    if (!(value.is_string() && value.get<std::string>().empty())) j[key] = value;
  return j;
}

/// The input-source part of the command echo.
Json source_echo(const CommonOptions& opts, const std::string& verb,
                 std::initializer_list<std::pair<std::string, Json>> args) {
  Json j = echo(verb, args);
  if (!opts.input_file.empty()) j["file"] = opts.input_file;
  if (!opts.model.empty()) {
    j["model"] = opts.model;
    j["field"] = opts.field;
    j["eta"] = opts.eta;
  }
  if (opts.force) j["force"] = true;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification laboratory for transposition algebras of prime type"};
  app.require_subcommand(1);

  CommonOptions opts;
  int axis = 0, axis2 = 1;
  std::string side = "left", law_spec, seeds = "0,1", vector_spec = "0";
  std::size_t cap = 10000, max_dim = 0;
  bool parallel = false, abstract_form = false;

  CLI::App* build = app.add_subcommand("build", "construct an algebra and write it");
  add_algebra_source(build, opts, /*with_file=*/false);
  build->add_flag("--abstract", abstract_form, "emit the structure-constant form");
  add_output_options(build, opts);

  CLI::App* validate = app.add_subcommand("validate", "check a transposition system");
  validate->add_option("input", opts.input_file, "system JSON file");
  validate->add_option("--model", opts.model, "bundled model spec");
  add_output_options(validate, opts);

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigen-decomposition of an axis");
  add_algebra_source(spectrum, opts);
  spectrum->add_option("--axis", axis, "basis index of the axis");
  spectrum->add_option("--side", side, "left|right")->check(CLI::IsMember({"left", "right"}));
  add_output_options(spectrum, opts);

  CLI::App* fusion = app.add_subcommand("fusion", "verify or infer a fusion law");
  add_algebra_source(fusion, opts);
  fusion->add_option("--axis", axis, "basis index of the axis");
  fusion->add_option("--side", side, "left|right")->check(CLI::IsMember({"left", "right"}));
  fusion->add_option("--law", law_spec, "M:<a>,<b> | GM:<a>,<b> | infer")->required();
  add_output_options(fusion, opts);

  CLI::App* miyamoto = app.add_subcommand("miyamoto", "Miyamoto group vs conjugation image");
  add_algebra_source(miyamoto, opts);
  miyamoto->add_option("--cap", cap, "group closure element cap");
  add_output_options(miyamoto, opts);

  CLI::App* form = app.add_subcommand("form", "Gram data and Frobenius defects");
  add_algebra_source(form, opts);
  add_output_options(form, opts);

  CLI::App* ideal = app.add_subcommand("ideal", "right ideal closure of a vector");
  add_algebra_source(ideal, opts);
  ideal->add_option("--vector", vector_spec, "basis index or rand:<seed>");
  add_output_options(ideal, opts);

  CLI::App* closure = app.add_subcommand("closure", "subalgebra closure of basis seeds");
  add_algebra_source(closure, opts);
  closure->add_option("--seeds", seeds, "comma-separated basis indices");
  closure->add_option("--max-dim", max_dim, "dimension cap (default: the algebra dimension)");
  add_output_options(closure, opts);

  CLI::App* verify_gm = app.add_subcommand("verify-gm", "intrinsic axioms of an abstract algebra");
  verify_gm->add_option("input", opts.input_file, "abstract or algebra JSON file")->required();
  add_output_options(verify_gm, opts);

  CLI::App* audit = app.add_subcommand("audit", "closed-form product identities of a block");
  add_algebra_source(audit, opts);
  audit->add_option("--axis", axis, "first block index");
  audit->add_option("--axis2", axis2, "second block index");
  add_output_options(audit, opts);

  CLI::App* report_all = app.add_subcommand("report-all", "run the full verification suite");
  report_all->add_flag("--parallel", parallel, "evaluate criteria concurrently");
  add_output_options(report_all, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int exit_code = 0;
  try {
    std::string digest_payload;
    if (build->parsed()) {
      const gmlab::GMAlgebra alg = resolve_algebra(opts, digest_payload);
      const Json file_json = abstract_form
                                 ? gmlab::abstract_to_json(gmlab::abstract_from(alg))
                                 : gmlab::algebra_to_json(alg);
      if (opts.out.empty()) {
        std::cout << file_json.dump(2) << "\n";
      } else {
        gmlab::write_text_file(opts.out, file_json.dump(2) + "\n");
        Json results;
        results["written"] = opts.out;
        results["dim"] = alg.dim();
        results["p"] = alg.sys.p;
        results["eta"] = alg.eta.str();
        results["field"] = alg.field.str();
        const CommonOptions echo_opts = [&] {
          CommonOptions o = opts;
          o.out.clear();  // the report goes to stdout
          return o;
        }();
        exit_code = emit_report(
            echo_opts, "build",
            echo("build", {{"model", opts.model}, {"field", opts.field}, {"eta", opts.eta},
                           {"abstract", abstract_form}}),
            digest_payload, results, true);
      }
    } else if (validate->parsed()) {
      gmlab::TranspositionSystem sys;
      if (!opts.input_file.empty()) {
        const std::string content = gmlab::read_text_file(opts.input_file);
        digest_payload = content;
        sys = gmlab::system_from_json(Json::parse(content));
      } else if (!opts.model.empty()) {
        digest_payload = opts.model;
        sys = gmlab::construct_model(opts.model);
      } else {
        throw gmlab::ParseError("validate needs a file or --model");
      }
      const gmlab::ValidationReport report = gmlab::validate_system(sys);
      exit_code = emit_report(opts, "validate",
                              echo("validate", {{"model", opts.model}, {"file", opts.input_file}}),
                              digest_payload, gmlab::validation_to_json(report), report.ok());
    } else if (spectrum->parsed()) {
      const gmlab::GMAlgebra alg = resolve_algebra(opts, digest_payload);
      const auto dec = gmlab::decompose(alg, axis, parse_side(side));
      exit_code = emit_report(opts, "spectrum",
                              source_echo(opts, "spectrum", {{"axis", axis}, {"side", side}}),
                              digest_payload, gmlab::decomposition_to_json(dec), true);
    } else if (fusion->parsed()) {
      const gmlab::GMAlgebra alg = resolve_algebra(opts, digest_payload);
      digest_payload += "|" + law_spec;
      Json results;
      bool pass = true;
      if (law_spec == "infer") {
        results["law"] = gmlab::law_to_json(gmlab::infer_law(alg, axis, parse_side(side)));
      } else {
        const auto colon = law_spec.find(':');
        const auto comma = law_spec.find(',', colon == std::string::npos ? 0 : colon);
        if (colon == std::string::npos || comma == std::string::npos)
          throw gmlab::ParseError("bad law spec '" + law_spec + "'");
        const std::string kind = law_spec.substr(0, colon);
        const gmlab::Scalar alpha =
            gmlab::parse_scalar(law_spec.substr(colon + 1, comma - colon - 1), alg.field);
        const gmlab::Scalar beta = gmlab::parse_scalar(law_spec.substr(comma + 1), alg.field);
        gmlab::FusionLaw law;
        if (kind == "M")
          law = gmlab::monster_law(alpha, beta);
        else if (kind == "GM")
          law = gmlab::generalized_monster_law(alpha, beta);
        else
          throw gmlab::ParseError("bad law kind '" + kind + "'");
        const gmlab::FusionReport report =
            gmlab::verify_axis(alg, axis, law, parse_side(side));
        results["report"] = gmlab::fusion_report_to_json(report);
        results["law"] = gmlab::law_to_json(law);
        pass = report.pass;
      }
      exit_code = emit_report(opts, "fusion",
                              source_echo(opts, "fusion",
                                          {{"axis", axis}, {"side", side}, {"law", law_spec}}),
                              digest_payload, results, pass);
    } else if (miyamoto->parsed()) {
      const gmlab::GMAlgebra alg = resolve_algebra(opts, digest_payload);
      const gmlab::MiyamotoResult result = gmlab::miyamoto_group(alg, cap);
      exit_code = emit_report(opts, "miyamoto", source_echo(opts, "miyamoto", {{"cap", cap}}),
                              digest_payload, gmlab::miyamoto_to_json(result),
                              result.complete && result.matches_conjugation);
    } else if (form->parsed()) {
      const gmlab::GMAlgebra alg = resolve_algebra(opts, digest_payload);
      Json results;
      results["gram"] = gmlab::gram_to_json(gmlab::gram(alg));
      results["frobenius"] = gmlab::frobenius_to_json(gmlab::frobenius_defect(alg));
      exit_code = emit_report(opts, "form", source_echo(opts, "form", {}), digest_payload,
                              results, true);
    } else if (ideal->parsed()) {
      const gmlab::GMAlgebra alg = resolve_algebra(opts, digest_payload);
      digest_payload += "|" + vector_spec;
      gmlab::ExactVector v;
      if (vector_spec.rfind("rand:", 0) == 0) {
        std::mt19937 rng(static_cast<unsigned>(std::stoul(vector_spec.substr(5))));
        do {
          v = gmlab::zero_vector(alg.field, alg.dim());
          for (auto& entry : v)
            entry = gmlab::Scalar::of_int(static_cast<long long>(rng() % 5) - 2, alg.field);
        } while (gmlab::is_zero_vector(v));
      } else {
        const int idx = std::stoi(vector_spec);
        if (idx < 0 || idx >= alg.dim())
          throw gmlab::ParseError("vector index out of range");
        v = gmlab::unit_vector(alg.field, alg.dim(), idx);
      }
      const auto basis = gmlab::right_ideal_closure(alg, v);
      Json results;
      results["dim"] = basis.size();
      results["whole_algebra"] = basis.size() == static_cast<std::size_t>(alg.dim());
      results["basis"] = gmlab::basis_to_json(basis);
      exit_code = emit_report(opts, "ideal", source_echo(opts, "ideal", {{"vector", vector_spec}}),
                              digest_payload, results, true);
    } else if (closure->parsed()) {
      const gmlab::GMAlgebra alg = resolve_algebra(opts, digest_payload);
      digest_payload += "|" + seeds;
      std::vector<gmlab::ExactVector> seed_vectors;
      std::stringstream ss(seeds);
      for (std::string item; std::getline(ss, item, ',');) {
        const int idx = std::stoi(item);
        if (idx < 0 || idx >= alg.dim())
          throw gmlab::ParseError("seed index out of range");
        seed_vectors.push_back(gmlab::unit_vector(alg.field, alg.dim(), idx));
      }
      const std::size_t effective_cap =
          max_dim == 0 ? static_cast<std::size_t>(alg.dim()) : max_dim;
      const auto result = gmlab::subalgebra_closure(alg, seed_vectors, effective_cap);
      exit_code = emit_report(opts, "closure",
                              source_echo(opts, "closure",
                                          {{"seeds", seeds}, {"max_dim", effective_cap}}),
                              digest_payload, gmlab::closure_to_json(result), true);
    } else if (verify_gm->parsed()) {
      const std::string content = gmlab::read_text_file(opts.input_file);
      digest_payload = content;
      gmlab::AbstractAlgebra abstract;
      const Json j = Json::parse(content);
      if (j.contains("system"))
        abstract = gmlab::abstract_from(gmlab::algebra_from_json(j));
      else
        abstract = gmlab::abstract_from_json(j);
      const gmlab::AxiomReport report = gmlab::verify_gm_type(abstract);
      Json results;
      results["axioms"] = gmlab::axiom_report_to_json(report);
      if (report.all_pass())
        results["reconstruction"] =
            gmlab::reconstruction_to_json(gmlab::reconstruct_and_compare(abstract));
      exit_code = emit_report(opts, "verify-gm", echo("verify-gm", {{"file", opts.input_file}}),
                              digest_payload, results, report.all_pass());
    } else if (audit->parsed()) {
      const gmlab::GMAlgebra alg = resolve_algebra(opts, digest_payload);
      const gmlab::AuditReport report = gmlab::audit_identities(alg, axis, axis2);
      exit_code = emit_report(opts, "audit", source_echo(opts, "audit", {{"axis", axis}, {"axis2", axis2}}),
                              digest_payload, gmlab::audit_to_json(report), true);
    } else if (report_all->parsed()) {
      const auto results = gmlab::run_acceptance(parallel);
      Json list = Json::array();
      bool all_pass = true;
      for (const auto& r : results) {
        list.push_back(Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass},
                            {"detail", r.detail}});
        all_pass &= r.pass;
      }
      Json summary;
      summary["criteria"] = std::move(list);
      summary["all_pass"] = all_pass;
      exit_code = emit_report(opts, "report-all", echo("report-all", {{"parallel", parallel}}),
                              "report-all", summary, all_pass);
    }
  } catch (const gmlab::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const gmlab::MathError& e) {
    std::cerr << "mathematical failure: " << e.what() << "\n";
    return 1;
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "timing_ms=" << elapsed.count() << "\n";
  return exit_code;
}
