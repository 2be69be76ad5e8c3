#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "floer/corpus.hpp"
#include "floer/errors.hpp"
#include "floer/json_io.hpp"
#include "floer/report.hpp"

namespace {

enum ExitCode { ok = 0, schema_error = 2, domain_error = 3, internal_error = 4 };

struct Settings {
  bool json = false;
  bool table = false;
  std::optional<int> truncation;
  std::optional<int> window_slack;
};

void print(const floer::ResultDocument& doc, const Settings& s) {
  if (s.table) {
    std::cout << floer::to_table(doc);
  } else {
    std::cout << floer::emit(doc).dump(2) << "\n";
  }
}

floer::RunOptions run_options(const floer::SpecOptions& file, const Settings& s) {
  floer::RunOptions opts;
  opts.truncation = s.truncation.value_or(file.truncation.value_or(0));
  opts.window_slack = s.window_slack.value_or(file.window_slack.value_or(0));
  return opts;
}

int run_corpus(const Settings& s) {
  const auto results = floer::run_corpus();
  int failed = 0;
  floer::Json out = floer::Json::array();
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    if (s.table) {
      std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name;
      if (!r.passed) std::cout << ": " << r.detail;
      std::cout << "\n";
    }
    out.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (s.table) {
    std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " passed\n";
  } else {
    std::cout << floer::Json{{"corpus", out}, {"failed", failed}}.dump(2) << "\n";
  }
  return failed == 0 ? ok : internal_error;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot Floer homology and integer surgery calculator"};
  app.require_subcommand(1);
  Settings settings;
  auto* json_flag = app.add_flag("--json", settings.json, "Emit the JSON result document (default)");
  app.add_flag("--table", settings.table, "Emit a human-readable table")->excludes(json_flag);
  app.add_option("--truncation", settings.truncation, "Initial truncation order N for power series (0 = automatic)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--window-slack", settings.window_slack, "Extra columns on each side of the mapping cone window")
      ->check(CLI::NonNegativeNumber);

  std::string path;
  int n = 0;
  bool verify = false;
  auto* hfk = app.add_subcommand("hfk", "Knot invariants of a knot spec");
  hfk->add_option("spec", path, "Knot spec JSON")->required();
  auto* surgery = app.add_subcommand("surgery", "HF^- of integer surgery on a knot spec");
  surgery->add_option("spec", path, "Knot spec JSON")->required();
  surgery->add_option("--n", n, "Surgery coefficient")->required();
  surgery->add_flag("--verify", verify, "Cross-check with a second method");
  auto* diagram = app.add_subcommand("diagram", "Complex and invariants of a (1,1)-diagram");
  diagram->add_option("file", path, "Diagram JSON")->required();
  auto* h1 = app.add_subcommand("h1", "First homology from an intersection matrix");
  h1->add_option("matrix", path, "Matrix JSON")->required();
  auto* corpus = app.add_subcommand("corpus", "Run the built-in regression examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return schema_error;
  }

  try {
    floer::ResultDocument doc;
    if (hfk->parsed()) {
      const auto spec = floer::load_knot_document(path);
      doc.invariants = floer::knot_invariants(floer::build(spec.knot));
    } else if (surgery->parsed()) {
      const auto spec = floer::load_knot_document(path);
      auto opts = run_options(spec.options, settings);
      opts.verify = verify;
      doc.surgery = floer::surgery_report(floer::build(spec.knot), n, opts);
    } else if (diagram->parsed()) {
      const auto d = floer::load_diagram(path);
      doc.diagram = floer::diagram_report(d);
      doc.invariants = floer::knot_invariants(floer::cfk_from_diagram(d));
    } else if (h1->parsed()) {
      doc.h1 = floer::h1_report(floer::parse_matrix(floer::read_json_file(path)));
    } else if (corpus->parsed()) {
      return run_corpus(settings);
    }
    print(doc, settings);
    return ok;
  } catch (const floer::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return schema_error;
  } catch (const floer::DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return domain_error;
  } catch (const floer::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal_error;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal_error;
  }
}
