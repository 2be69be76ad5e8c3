#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "floer/h1.hpp"
#include "floer/knots.hpp"
#include "floer/one_one.hpp"
#include "floer/report.hpp"

namespace floer {

using Json = nlohmann::json;

struct SpecOptions {
  std::optional<int> truncation;
  std::optional<int> window_slack;
  bool debug = false;
};

struct KnotSpecDocument {
  KnotSpec knot;
  SpecOptions options;
};

/// Reads a file and parses it as JSON. Unreadable files and syntax errors
/// throw SchemaError.
Json read_json_file(const std::filesystem::path& path);

/// "p/q", "p" or a JSON integer. Decimals are rejected.
Rational parse_rational(const Json& j);
std::string format_rational(const Rational& r);

/// Relative diagram paths resolve against `base_dir`.
KnotSpec parse_knot_spec(const Json& j, const std::filesystem::path& base_dir = {});
KnotSpecDocument parse_knot_document(const Json& j, const std::filesystem::path& base_dir = {});
KnotSpecDocument load_knot_document(const std::filesystem::path& path);
Json knot_spec_to_json(const KnotSpec& spec);

OneOneDiagram parse_diagram(const Json& j);
OneOneDiagram load_diagram(const std::filesystem::path& path);
Json diagram_to_json(const OneOneDiagram& d);

/// {"matrix": [[...]]} or a bare array of rows; must be square.
IntMatrix parse_matrix(const Json& j);

Json module_to_json(const DvrModule& m);
DvrModule module_from_json(const Json& j);

Json emit(const ResultDocument& doc);
/// Inverse of emit; throws SchemaError on any shape violation.
ResultDocument parse_result(const Json& j);

}  // namespace floer
