#include "greenlie/functor_examples.hpp"
#include "greenlie/serialization.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace greenlie;

namespace {

// Exit codes: 0 clean, 1 validation or internal-check failure, 2 malformed input,
// 3 violated precondition. All reports go to standard output as a single document;
// --format text renders the same data for humans, --out additionally writes the JSON
// document to a file. Identical inputs produce byte-identical output.

struct Output {
  std::string format = "json";
  std::string out_path;
};

void emit(const Json& doc, const Output& output, const std::string& text) {
  if (!output.out_path.empty()) write_document(output.out_path, doc);
  if (output.format == "text")
    std::cout << text;
  else
    std::cout << render_document(doc);
}

std::string indices_text(const std::vector<std::size_t>& indices) {
  std::string out = "(";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(indices[i]);
  }
  return out + ")";
}

std::string report_text(const ValidationReport& report) {
  if (report.ok()) return "all axioms hold\n";
  std::string out;
  for (const Finding& f : report.findings()) {
    out += f.check + " at " + indices_text(f.indices);
    if (!f.detail.empty()) out += ": " + f.detail;
    out += "\n";
  }
  return out;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty()) throw ParseError(what + ": expected a non-negative integer");
  for (char ch : text)
    if (ch < '0' || ch > '9')
      throw ParseError(what + ": expected a non-negative integer, got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw ParseError(what + ": value '" + text + "' is out of range");
  }
}

LieBimodule resolve_module(const std::string& spec, const GreenLieFunctor& L) {
  if (spec == "adjoint") return adjoint_bimodule(L);
  if (spec.rfind("trivial:", 0) == 0)
    return trivial_bimodule(L, parse_count(spec.substr(8), "--module trivial dimension"));
  return load_bimodule(read_document(spec), L);
}

Json summarized(const char* command, const ValidationReport& report) {
  Json doc = Json::object();
  doc["command"] = command;
  doc["summary"] = report.ok() ? "all axioms hold"
                               : std::to_string(report.findings().size()) +
                                     " axiom violation(s)";
  doc["report"] = dump_report(report);
  return doc;
}

/// Functor and module validation gate shared by every computing command: a report
/// document and exit status 1 instead of computing on invalid data.
bool gate(const char* command, const GreenLieFunctor& L, const LieBimodule* M,
          const Output& output) {
  ValidationReport report = validate_green_lie(L);
  if (M) report.merge(validate_bimodule(L, *M));
  if (report.ok()) return true;
  Json doc = summarized(command, report);
  doc["summary"] = "input fails validation: " + doc["summary"].get<std::string>();
  emit(doc, output, doc["summary"].get<std::string>() + "\n" + report_text(report));
  return false;
}

int cmd_validate(const std::string& input, const std::string& module_spec,
                 const Output& output) {
  GreenLieFunctor L = load_functor(read_document(input));
  ValidationReport report = validate_green_lie(L);
  if (!module_spec.empty()) report.merge(validate_bimodule(L, resolve_module(module_spec, L)));
  Json doc = summarized("validate", report);
  doc["input"] = input;
  emit(doc, output, report_text(report));
  return report.ok() ? 0 : 1;
}

int cmd_cohomology(const std::string& input, const std::string& module_spec,
                   std::size_t max_degree, const Output& output) {
  GreenLieFunctor L = load_functor(read_document(input));
  LieBimodule M = resolve_module(module_spec, L);
  if (!gate("cohomology", L, &M, output)) return 1;
  Json doc = Json::object();
  doc["command"] = "cohomology";
  doc["input"] = input;
  doc["module"] = module_spec;
  doc["max_degree"] = max_degree;
  Json groups = Json::array();
  std::string text = "degree  dim_top  dim_bottom\n";
  for (std::size_t n = 0; n <= max_degree; ++n) {
    CohomologyResult h = cohomology(L, M, n);
    groups.push_back(dump_cohomology(L, M, h));
    text += "H^" + std::to_string(n) + "     " + std::to_string(h.dim_top) + "        " +
            std::to_string(h.dim_bottom) + "\n";
  }
  doc["groups"] = std::move(groups);
  emit(doc, output, text);
  return 0;
}

int cmd_cup(const std::string& input, const std::string& module_spec, std::size_t max_degree,
            const Output& output) {
  GreenLieFunctor L = load_functor(read_document(input));
  LieBimodule M = resolve_module(module_spec, L);
  if (!gate("cup", L, &M, output)) return 1;
  GradedCohomologyTable table = graded_cohomology_table(L, M, max_degree);
  Json doc = Json::object();
  doc["command"] = "cup";
  doc["input"] = input;
  doc["module"] = module_spec;
  Json table_doc = dump_product_table(L, M, table);
  for (auto& [key, value] : table_doc.items()) doc[key] = value;
  std::string text = "degree  dim_top  dim_bottom\n";
  for (const CohomologyResult& h : table.groups)
    text += "H^" + std::to_string(h.degree) + "     " + std::to_string(h.dim_top) +
            "        " + std::to_string(h.dim_bottom) + "\n";
  text += "products (m,n): top and bottom matrices in the report document\n";
  emit(doc, output, text);
  return 0;
}

int cmd_extend(const std::string& input, const std::string& module_spec,
               const std::string& cocycle_path, const Output& output) {
  GreenLieFunctor L = load_functor(read_document(input));
  LieBimodule M = resolve_module(module_spec, L);
  if (!gate("extend", L, &M, output)) return 1;
  EquivCochain f = load_cochain(read_document(cocycle_path), L, M);
  Extension E = build_extension(L, M, f);
  Json doc = dump_extension(E, &f);
  std::string text = "extension built: total space dims (" + std::to_string(E.B.top_dim()) +
                     ", " + std::to_string(E.B.bottom_dim()) + ")\n";
  emit(doc, output, text);
  return 0;
}

int cmd_extract(const std::string& input, const Output& output) {
  Extension E = load_extension(read_document(input));
  ValidationReport report = validate_extension(E);
  if (!report.ok()) {
    Json doc = summarized("extract", report);
    doc["summary"] = "input fails validation: " + doc["summary"].get<std::string>();
    emit(doc, output, doc["summary"].get<std::string>() + "\n" + report_text(report));
    return 1;
  }
  EquivCochain f = extract_cocycle(E);
  Json doc = dump_cochain(f);
  emit(doc, output, "extracted a degree-2 cocycle; coefficients in the report document\n");
  return 0;
}

int cmd_equiv(const std::string& input, const std::string& module_spec,
              const std::string& f_path, const std::string& g_path, const Output& output) {
  GreenLieFunctor L = load_functor(read_document(input));
  LieBimodule M = resolve_module(module_spec, L);
  if (!gate("equiv", L, &M, output)) return 1;
  EquivCochain f = load_cochain(read_document(f_path), L, M);
  EquivCochain g = load_cochain(read_document(g_path), L, M);
  auto h = find_equivalence(L, M, f, g);
  Json doc = Json::object();
  doc["command"] = "equiv";
  doc["equivalent"] = h.has_value();
  doc["witness"] = h ? dump_cochain(*h) : Json();
  emit(doc, output,
       h ? std::string("equivalent: the witness 1-cochain is in the report document\n")
         : std::string("not equivalent: the difference is not a coboundary\n"));
  return 0;
}

int cmd_classify(const std::string& input, const std::string& module_spec,
                 const Output& output) {
  GreenLieFunctor L = load_functor(read_document(input));
  LieBimodule M = resolve_module(module_spec, L);
  if (!gate("classify", L, &M, output)) return 1;
  ExtensionClassification cls = classify_extensions(L, M);
  Json doc = Json::object();
  doc["command"] = "classify";
  doc["input"] = input;
  doc["module"] = module_spec;
  doc["h2"] = dump_cohomology(L, M, cls.h2);
  Json extensions = Json::array();
  for (std::size_t k = 0; k < cls.extensions.size(); ++k)
    extensions.push_back(dump_extension(cls.extensions[k], &cls.representatives[k]));
  doc["extensions"] = std::move(extensions);
  std::string text = "H^2 dims: top " + std::to_string(cls.h2.dim_top) + ", bottom " +
                     std::to_string(cls.h2.dim_bottom) + "\n" +
                     std::to_string(cls.extensions.size()) +
                     " extension(s) built from the top-level representatives\n";
  emit(doc, output, text);
  return 0;
}

int cmd_examples(bool list, const std::vector<std::string>& emit_args, const Output& output) {
  if (list || emit_args.empty()) {
    Json doc = Json::object();
    doc["command"] = "examples";
    Json catalog = Json::array();
    std::string text;
    for (const ExampleInfo& info : list_examples()) {
      Json entry = Json::object();
      entry["name"] = info.name;
      entry["parameters"] = info.parameters;
      entry["provenance"] = info.provenance;
      catalog.push_back(std::move(entry));
      text += info.name + "(" + info.parameters + "): " + info.provenance + "\n";
    }
    doc["catalog"] = std::move(catalog);
    emit(doc, output, text);
    return 0;
  }
  std::vector<std::size_t> params;
  for (std::size_t i = 1; i < emit_args.size(); ++i)
    params.push_back(parse_count(emit_args[i], "example parameter"));
  GreenLieFunctor g = build_example(emit_args[0], params);
  Json doc = dump_functor(g);
  emit(doc, output,
       "emitted " + emit_args[0] + " with dims (" + std::to_string(g.top_dim()) + ", " +
           std::to_string(g.bottom_dim()) + ")\n");
  return 0;
}

int fail(int status, const std::string& kind, const std::string& code,
         const std::string& message, const Json* report = nullptr) {
  Json doc = Json::object();
  Json error = Json::object();
  error["kind"] = kind;
  if (!code.empty()) error["code"] = code;
  error["message"] = message;
  if (report) error["report"] = *report;
  doc["error"] = std::move(error);
  std::cout << render_document(doc);
  std::cerr << message << "\n";
  return status;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for two-level Green functors of Lie type: validation, "
               "equivariant cohomology, cup products, and abelian-kernel extensions"};
  app.require_subcommand(1);

  Output output;
  std::string input, module_spec, cocycle_path, f_path, g_path;
  std::size_t max_degree = 2;
  bool list_flag = false;
  std::vector<std::string> emit_args;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", output.format, "json (default) or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", output.out_path, "also write the JSON document to this path");
  };

  CLI::App* validate = app.add_subcommand("validate", "check every axiom of a functor document");
  validate->add_option("input", input, "functor JSON document")->required();
  validate->add_option("--module", module_spec, "also validate a bimodule: path, adjoint, or trivial:<dim>");
  add_output(validate);

  CLI::App* cohomology_cmd = app.add_subcommand("cohomology", "equivariant cohomology in degrees 0..max-degree");
  cohomology_cmd->add_option("input", input)->required();
  cohomology_cmd->add_option("--module", module_spec)->required();
  cohomology_cmd->add_option("--max-degree", max_degree);
  add_output(cohomology_cmd);

  CLI::App* cup_cmd = app.add_subcommand("cup", "cohomology with induced cup products");
  cup_cmd->add_option("input", input)->required();
  cup_cmd->add_option("--module", module_spec)->required();
  cup_cmd->add_option("--max-degree", max_degree);
  add_output(cup_cmd);

  CLI::App* extend = app.add_subcommand("extend", "build the extension of a degree-2 cocycle");
  extend->add_option("input", input)->required();
  extend->add_option("--module", module_spec)->required();
  extend->add_option("--cocycle", cocycle_path)->required();
  add_output(extend);

  CLI::App* extract = app.add_subcommand("extract", "recover the cocycle of an extension document");
  extract->add_option("input", input)->required();
  add_output(extract);

  CLI::App* equiv = app.add_subcommand("equiv", "search for an equivalence between two cocycles");
  equiv->add_option("input", input)->required();
  equiv->add_option("f", f_path, "first cocycle document")->required();
  equiv->add_option("g", g_path, "second cocycle document")->required();
  equiv->add_option("--module", module_spec)->required();
  add_output(equiv);

  CLI::App* classify = app.add_subcommand("classify", "extensions per second-cohomology class");
  classify->add_option("input", input)->required();
  classify->add_option("--module", module_spec)->required();
  add_output(classify);

  CLI::App* examples = app.add_subcommand("examples", "built-in constructor catalog");
  examples->add_flag("--list", list_flag, "print the catalog");
  examples->add_option("--emit", emit_args, "name and parameters of an instance to emit")
      ->expected(1, 3);
  add_output(examples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(input, module_spec, output);
    if (app.got_subcommand(cohomology_cmd))
      return cmd_cohomology(input, module_spec, max_degree, output);
    if (app.got_subcommand(cup_cmd)) return cmd_cup(input, module_spec, max_degree, output);
    if (app.got_subcommand(extend)) return cmd_extend(input, module_spec, cocycle_path, output);
    if (app.got_subcommand(extract)) return cmd_extract(input, output);
    if (app.got_subcommand(equiv)) return cmd_equiv(input, module_spec, f_path, g_path, output);
    if (app.got_subcommand(classify)) return cmd_classify(input, module_spec, output);
    if (app.got_subcommand(examples)) return cmd_examples(list_flag, emit_args, output);
    return 2;
  } catch (const ParseError& e) {
    return fail(2, "parse", "", e.what());
  } catch (const ValidationError& e) {
    Json report = dump_report(e.report());
    return fail(1, "validation", "", e.what(), &report);
  } catch (const InternalCheckError& e) {
    return fail(1, "internal-check", e.code(), e.what());
  } catch (const PrecondError& e) {
    return fail(3, "precondition", e.code(), e.what());
  }
}
