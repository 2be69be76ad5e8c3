#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>
#include <string>

#include "floer/corpus.hpp"
#include "floer/errors.hpp"
#include "floer/json_io.hpp"
#include "floer/one_one.hpp"
#include "floer/report.hpp"

namespace py = pybind11;
namespace fs = std::filesystem;

namespace {

// A document argument is either a path to a JSON file or JSON text.
struct Document {
  floer::Json json;
  fs::path dir;
};

Document read_document(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && arg.front() != '{' && arg.front() != '[' && fs::is_regular_file(arg, ec)) {
    return {floer::read_json_file(arg), fs::path(arg).parent_path()};
  }
  try {
    return {floer::Json::parse(arg), fs::current_path()};
  } catch (const floer::Json::parse_error& e) {
    throw floer::SchemaError(std::string("not a file or JSON document: ") + e.what());
  }
}

std::string dump(const floer::ResultDocument& doc) { return floer::emit(doc).dump(); }

std::string hfk(const std::string& spec) {
  const auto d = read_document(spec);
  floer::ResultDocument doc;
  doc.invariants = floer::knot_invariants(floer::build(floer::parse_knot_document(d.json, d.dir).knot));
  return dump(doc);
}

std::string surgery(const std::string& spec, int n, bool verify, std::optional<int> truncation,
                    std::optional<int> window_slack) {
  const auto d = read_document(spec);
  const auto parsed = floer::parse_knot_document(d.json, d.dir);
  floer::RunOptions opts;
  opts.truncation = truncation.value_or(parsed.options.truncation.value_or(0));
  opts.window_slack = window_slack.value_or(parsed.options.window_slack.value_or(0));
  opts.verify = verify;
  if (opts.truncation < 0 || opts.window_slack < 0) throw floer::SchemaError("options must be non-negative");
  floer::ResultDocument doc;
  doc.surgery = floer::surgery_report(floer::build(parsed.knot), n, opts);
  return dump(doc);
}

std::string diagram(const std::string& file) {
  const auto d = floer::parse_diagram(read_document(file).json);
  floer::ResultDocument doc;
  doc.diagram = floer::diagram_report(d);
  doc.invariants = floer::knot_invariants(floer::cfk_from_diagram(d));
  return dump(doc);
}

std::string h1(const std::string& matrix) {
  floer::ResultDocument doc;
  doc.h1 = floer::h1_report(floer::parse_matrix(read_document(matrix).json));
  return dump(doc);
}

std::string table(const std::string& result) {
  return floer::to_table(floer::parse_result(floer::Json::parse(result)));
}

py::list corpus() {
  py::list out;
  for (const auto& c : floer::run_corpus()) {
    py::dict row;
    row["name"] = c.name;
    row["passed"] = c.passed;
    row["detail"] = c.detail;
    out.append(row);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Knot Floer homology and integer surgery calculator";

  static py::exception<floer::SchemaError> schema_error(m, "SchemaError", PyExc_ValueError);
  static py::exception<floer::DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<floer::InternalError> internal_error(m, "InternalError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const floer::SchemaError& e) {
      schema_error(e.what());
    } catch (const floer::DomainError& e) {
      domain_error(e.what());
    } catch (const floer::InternalError& e) {
      internal_error(e.what());
    }
  });

  m.def("hfk", &hfk, py::arg("spec"), "Knot invariants as a JSON string");
  m.def("surgery", &surgery, py::arg("spec"), py::arg("n"), py::arg("verify") = false,
        py::arg("truncation") = py::none(), py::arg("window_slack") = py::none(),
        "HF^- of n-surgery as a JSON string");
  m.def("diagram", &diagram, py::arg("file"), "Complex and invariants of a (1,1)-diagram as a JSON string");
  m.def("h1", &h1, py::arg("matrix"), "First homology of an intersection matrix as a JSON string");
  m.def("table", &table, py::arg("result"), "Human-readable rendering of a result JSON string");
  m.def("corpus", &corpus, "Runs the built-in regression examples");
}
