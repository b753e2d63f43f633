// Batch front end: parse a problem document, run one computation, emit a
// deterministic JSON or text report.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "frk/driver.hpp"

namespace {

frk::json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open document: " + path);
  return frk::json::parse(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for additive sets and Freiman homomorphisms"};
  app.require_subcommand(1);

  std::string doc_path;
  std::vector<std::string> set_names, map_names;
  int order = 0;
  bool as_json = false, as_text = false, preserve_zero = false;
  std::uint64_t budget = frk::kDefaultHomBudget;
  if (const char* env = std::getenv("FRK_BUDGET"))
    budget = std::strtoull(env, nullptr, 10);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("doc", doc_path, "problem document (JSON)")->required();
    sub->add_option("--set", set_names, "set name (repeatable)");
    sub->add_option("--map", map_names, "map name (repeatable)");
    sub->add_option("--order", order, "Freiman order k (overrides document)");
    sub->add_flag("--json", as_json, "canonical JSON report");
    sub->add_flag("--text", as_text, "human-readable report");
    sub->add_flag("--preserve-zero", preserve_zero,
                  "restrict to 0-preserving maps");
    sub->add_option("--budget", budget, "search budget (candidate maps)");
  };

  for (const std::string& name : frk::subcommand_names())
    add_common(app.add_subcommand(name));
  std::string cmd_to_check = "doubling";
  CLI::App* validate_sub =
      app.add_subcommand("validate", "structural diagnostics only");
  add_common(validate_sub);
  validate_sub->add_option("--cmd", cmd_to_check,
                           "subcommand whose requirements to check");

  CLI11_PARSE(app, argc, argv);
  CLI::App* sub = app.get_subcommands().front();

  frk::RunOptions opts;
  opts.sets = set_names;
  opts.maps = map_names;
  if (order > 0) opts.order = order;
  opts.preserve_zero = preserve_zero;
  opts.budget = budget;

  try {
    frk::json doc = load_document(doc_path);
    if (sub->get_name() == "validate") {
      std::vector<std::string> diags = frk::validate(doc, cmd_to_check, opts);
      frk::json report = {{"diagnostics", diags}};
      std::cout << frk::emit_report(report, !as_text);
      return frk::kExitOk;
    }
    frk::ProblemDocument parsed = frk::parse_document(doc);
    frk::RunResult res = frk::run(sub->get_name(), parsed, opts);
    std::cout << frk::emit_report(res.report, !as_text);
    return res.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return frk::kExitInputError;
  }
}
