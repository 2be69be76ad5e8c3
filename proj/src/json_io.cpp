#include "floer/json_io.hpp"

#include <fstream>
#include <initializer_list>
#include <limits>
#include <regex>
#include <set>

#include "floer/errors.hpp"

namespace floer {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

void expect_object(const Json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) schema(where, "expected an object");
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!keys.count(key)) schema(where, "unknown key \"" + key + "\"");
  }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) schema(where, std::string("missing \"") + key + "\"");
  return *it;
}

long long as_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where, "expected an integer");
  return j.get<long long>();
}

int as_int(const Json& j, const std::string& where) {
  const long long v = as_integer(j, where);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) schema(where, "integer out of range");
  return static_cast<int>(v);
}

bool as_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean()) schema(where, "expected true or false");
  return j.get<bool>();
}

const std::string& as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a string");
  return j.get_ref<const std::string&>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  return j;
}

std::vector<int> int_list(const Json& j, const std::string& where) {
  std::vector<int> out;
  for (const auto& v : as_array(j, where)) out.push_back(as_int(v, where));
  return out;
}

LaurentPoly parse_alexander(const Json& j, const std::string& where) {
  std::vector<std::pair<int, long long>> terms;
  if (as_array(j, where).empty()) schema(where, "empty Alexander polynomial");
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) schema(where, "each term must be [exponent, coefficient]");
    terms.emplace_back(as_int(term[0], where), as_integer(term[1], where));
  }
  return LaurentPoly(terms);
}

Json alexander_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, c});
  return out;
}

Point parse_point(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) schema(where, "a point is [x, y]");
  return {parse_rational(j[0]), parse_rational(j[1])};
}

Json point_to_json(const Point& p) { return Json::array({format_rational(p.x), format_rational(p.y)}); }

Json group_to_json(const AbelianGroup& g) {
  return {{"invariant_factors", g.invariant_factors}, {"free_rank", g.free_rank}, {"text", g.to_string()}};
}

AbelianGroup group_from_json(const Json& j, const std::string& where) {
  expect_object(j, where, {"invariant_factors", "free_rank", "text"});
  AbelianGroup g;
  for (const auto& v : as_array(field(j, "invariant_factors", where), where)) {
    g.invariant_factors.push_back(as_integer(v, where));
  }
  g.free_rank = as_int(field(j, "free_rank", where), where);
  return g;
}

template <class T, class F>
std::optional<T> optional_field(const Json& j, const char* key, F&& read) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return read(*it);
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) schema("coordinate", "decimal numbers are not accepted; use \"p/q\"");
  if (!j.is_string()) schema("coordinate", "expected \"p/q\" or an integer");
  static const std::regex pattern(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?)");
  const std::string& text = j.get_ref<const std::string&>();
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) schema("coordinate", "\"" + text + "\" is not of the form p/q");
  const boost::multiprecision::cpp_int num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  const boost::multiprecision::cpp_int den(m[2].matched ? m[2].str() : "1");
  if (den == 0) schema("coordinate", "zero denominator in \"" + text + "\"");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  const auto num = numerator(r);
  const auto den = denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

KnotSpec parse_knot_spec(const Json& j, const std::filesystem::path& base_dir) {
  const std::string where = "knot";
  if (!j.is_object()) schema(where, "expected an object");
  const std::string& type = as_string(field(j, "type", where), where + ".type");
  if (type == "lspace") {
    expect_object(j, where, {"type", "alexander"});
    return KnotSpec::lspace(parse_alexander(field(j, "alexander", where), where + ".alexander"));
  }
  if (type == "alternating") {
    expect_object(j, where, {"type", "alexander", "signature"});
    return KnotSpec::alternating(parse_alexander(field(j, "alexander", where), where + ".alexander"),
                                 as_int(field(j, "signature", where), where + ".signature"));
  }
  if (type == "sum") {
    expect_object(j, where, {"type", "summands"});
    std::vector<KnotSpec> parts;
    for (const auto& s : as_array(field(j, "summands", where), where + ".summands")) {
      parts.push_back(parse_knot_spec(s, base_dir));
    }
    if (parts.empty()) schema(where, "a sum needs at least one summand");
    return KnotSpec::sum(std::move(parts));
  }
  if (type == "mirror" || type == "reverse") {
    expect_object(j, where, {"type", "of"});
    KnotSpec of = parse_knot_spec(field(j, "of", where), base_dir);
    return type == "mirror" ? KnotSpec::mirror(std::move(of)) : KnotSpec::reverse(std::move(of));
  }
  if (type == "one_one") {
    expect_object(j, where, {"type", "diagram"});
    const Json& d = field(j, "diagram", where);
    if (d.is_object()) return KnotSpec::one_one(std::make_shared<OneOneDiagram>(parse_diagram(d)));
    std::filesystem::path p = as_string(d, where + ".diagram");
    if (p.is_relative()) p = base_dir / p;
    return KnotSpec::one_one(std::make_shared<OneOneDiagram>(load_diagram(p)), p.string());
  }
  schema(where + ".type", "unknown knot type \"" + type + "\"");
}

KnotSpecDocument parse_knot_document(const Json& j, const std::filesystem::path& base_dir) {
  expect_object(j, "document", {"knot", "options"});
  KnotSpecDocument doc;
  doc.knot = parse_knot_spec(field(j, "knot", "document"), base_dir);
  if (auto it = j.find("options"); it != j.end()) {
    expect_object(*it, "options", {"truncation", "window_slack", "debug"});
    if (it->contains("truncation")) {
      doc.options.truncation = as_int((*it)["truncation"], "options.truncation");
      if (*doc.options.truncation < 0) schema("options.truncation", "must be nonnegative");
    }
    if (it->contains("window_slack")) {
      doc.options.window_slack = as_int((*it)["window_slack"], "options.window_slack");
      if (*doc.options.window_slack < 0) schema("options.window_slack", "must be nonnegative");
    }
    if (it->contains("debug")) doc.options.debug = as_bool((*it)["debug"], "options.debug");
  }
  return doc;
}

KnotSpecDocument load_knot_document(const std::filesystem::path& path) {
  return parse_knot_document(read_json_file(path), path.parent_path());
}

Json knot_spec_to_json(const KnotSpec& spec) {
  Json out{{"type", to_string(spec.kind)}};
  switch (spec.kind) {
    case KnotSpec::Kind::lspace:
      out["alexander"] = alexander_to_json(spec.alexander);
      break;
    case KnotSpec::Kind::alternating:
      out["alexander"] = alexander_to_json(spec.alexander);
      out["signature"] = spec.signature;
      break;
    case KnotSpec::Kind::sum:
      out["summands"] = Json::array();
      for (const auto& c : spec.children) out["summands"].push_back(knot_spec_to_json(c));
      break;
    case KnotSpec::Kind::mirror:
    case KnotSpec::Kind::reverse:
      out["of"] = knot_spec_to_json(spec.children.front());
      break;
    case KnotSpec::Kind::one_one:
      if (!spec.diagram_path.empty()) {
        out["diagram"] = spec.diagram_path;
      } else {
        out["diagram"] = diagram_to_json(*spec.diagram);
      }
      break;
  }
  return out;
}

OneOneDiagram parse_diagram(const Json& j) {
  const std::string where = "diagram";
  expect_object(j, where, {"beta", "translation", "w", "z", "labels"});
  OneOneDiagram d;
  for (const auto& p : as_array(field(j, "beta", where), where + ".beta")) d.beta.push_back(parse_point(p, where + ".beta"));
  if (d.beta.empty()) schema(where + ".beta", "needs at least one vertex");
  const Json& t = field(j, "translation", where);
  if (!t.is_array() || t.size() != 2) schema(where + ".translation", "expected [m, n]");
  d.translation = {as_int(t[0], where + ".translation"), as_int(t[1], where + ".translation")};
  d.w = parse_point(field(j, "w", where), where + ".w");
  d.z = parse_point(field(j, "z", where), where + ".z");
  if (auto it = j.find("labels"); it != j.end()) {
    for (const auto& l : as_array(*it, where + ".labels")) d.labels.push_back(as_string(l, where + ".labels"));
  }
  return d;
}

OneOneDiagram load_diagram(const std::filesystem::path& path) { return parse_diagram(read_json_file(path)); }

Json diagram_to_json(const OneOneDiagram& d) {
  Json out;
  out["beta"] = Json::array();
  for (const auto& p : d.beta) out["beta"].push_back(point_to_json(p));
  out["translation"] = {d.translation.first, d.translation.second};
  out["w"] = point_to_json(d.w);
  out["z"] = point_to_json(d.z);
  if (!d.labels.empty()) out["labels"] = d.labels;
  return out;
}

IntMatrix parse_matrix(const Json& j) {
  const std::string where = "matrix";
  const Json* rows = &j;
  if (j.is_object()) {
    expect_object(j, where, {"matrix"});
    rows = &field(j, "matrix", where);
  }
  IntMatrix m;
  for (const auto& row : as_array(*rows, where)) {
    std::vector<long long> r;
    for (const auto& v : as_array(row, where + " row")) r.push_back(as_integer(v, where + " entry"));
    m.push_back(std::move(r));
  }
  if (m.size() == 1 && m.front().empty()) m.clear();
  for (const auto& r : m) {
    if (r.size() != m.size()) schema(where, "intersection matrix must be square");
  }
  return m;
}

Json module_to_json(const DvrModule& m) {
  Json torsion = Json::array();
  for (const auto& t : m.torsion()) torsion.push_back({t.grading, t.exponent});
  return {{"free", m.free_gradings()}, {"torsion", torsion}, {"mode", to_string(m.mode())}};
}

DvrModule module_from_json(const Json& j) {
  const std::string where = "module";
  expect_object(j, where, {"free", "torsion", "mode"});
  std::vector<TorsionSummand> torsion;
  for (const auto& t : as_array(field(j, "torsion", where), where + ".torsion")) {
    if (!t.is_array() || t.size() != 2) schema(where + ".torsion", "each entry is [grading, exponent]");
    torsion.push_back({as_int(t[0], where), as_int(t[1], where)});
  }
  const std::string& mode = as_string(field(j, "mode", where), where + ".mode");
  if (mode != "absolute" && mode != "relative") schema(where + ".mode", "expected absolute or relative");
  try {
    return DvrModule(int_list(field(j, "free", where), where + ".free"), std::move(torsion),
                     mode == "absolute" ? GradingMode::absolute : GradingMode::relative);
  } catch (const DomainError& e) {
    schema(where, e.what());
  }
}

Json emit(const ResultDocument& doc) {
  Json out = Json::object();
  if (doc.invariants) {
    const auto& inv = *doc.invariants;
    Json table = Json::array();
    for (const auto& [key, dim] : inv.hfk_hat) table.push_back({{"m", key.first}, {"s", key.second}, {"dim", dim}});
    out["invariants"] = {{"hfk_hat", table},
                         {"hfk_minus", module_to_json(inv.hfk_minus)},
                         {"genus", inv.genus},
                         {"fibered", inv.fibered},
                         {"alexander", alexander_to_json(inv.alexander)}};
  }
  if (doc.surgery) {
    const auto& s = *doc.surgery;
    Json classes = Json::array();
    for (const auto& c : s.classes) {
      Json stability{{"truncation", c.truncation}, {"truncation_stable", c.truncation_stable}};
      stability["window_stable"] = c.window_stable ? Json(*c.window_stable) : Json(nullptr);
      classes.push_back({{"spin_c", c.spin_c},
                         {"module", module_to_json(c.module)},
                         {"l_space", c.l_space},
                         {"hat_dimension", c.hat_dimension},
                         {"stability", stability}});
    }
    out["surgery"] = {{"n", s.n},
                      {"method", s.method},
                      {"classes", classes},
                      {"l_space", s.l_space},
                      {"h1", group_to_json(s.h1)},
                      {"class_count_matches", s.class_count_matches},
                      {"hat_total", s.hat_total},
                      {"dimension_check", s.dimension_check},
                      {"verified", s.verified ? Json(*s.verified) : Json(nullptr)}};
  }
  if (doc.diagram) {
    const auto& d = *doc.diagram;
    Json bigons = Json::array();
    for (const auto& b : d.bigons) bigons.push_back({{"from", b.from}, {"to", b.to}, {"n_w", b.n_w}, {"n_z", b.n_z}});
    Json gens = Json::array();
    for (const auto& g : d.complex) {
      gens.push_back({{"label", g.label}, {"gr_u", g.gr_u}, {"gr_v", g.gr_v}, {"boundary", g.boundary}});
    }
    out["diagram"] = {{"generator_count", d.generator_count}, {"bigons", bigons}, {"complex", gens}};
  }
  if (doc.h1) {
    out["h1"] = {{"matrix", doc.h1->matrix}, {"group", group_to_json(doc.h1->group)},
                 {"determinant", doc.h1->determinant}};
  }
  return out;
}

ResultDocument parse_result(const Json& j) {
  expect_object(j, "result", {"invariants", "surgery", "diagram", "h1"});
  ResultDocument doc;
  if (auto it = j.find("invariants"); it != j.end()) {
    const std::string where = "invariants";
    expect_object(*it, where, {"hfk_hat", "hfk_minus", "genus", "fibered", "alexander"});
    InvariantsReport inv;
    for (const auto& e : as_array(field(*it, "hfk_hat", where), where + ".hfk_hat")) {
      expect_object(e, where + ".hfk_hat", {"m", "s", "dim"});
      inv.hfk_hat[{as_int(field(e, "m", where), where), as_int(field(e, "s", where), where)}] =
          as_int(field(e, "dim", where), where);
    }
    inv.hfk_minus = module_from_json(field(*it, "hfk_minus", where));
    inv.genus = as_int(field(*it, "genus", where), where + ".genus");
    inv.fibered = as_bool(field(*it, "fibered", where), where + ".fibered");
    inv.alexander = parse_alexander(field(*it, "alexander", where), where + ".alexander");
    doc.invariants = std::move(inv);
  }
  if (auto it = j.find("surgery"); it != j.end()) {
    const std::string where = "surgery";
    expect_object(*it, where,
                  {"n", "method", "classes", "l_space", "h1", "class_count_matches", "hat_total", "dimension_check",
                   "verified"});
    SurgeryReport s;
    s.n = as_int(field(*it, "n", where), where + ".n");
    s.method = as_string(field(*it, "method", where), where + ".method");
    if (s.method != "large" && s.method != "cone") schema(where + ".method", "expected large or cone");
    for (const auto& c : as_array(field(*it, "classes", where), where + ".classes")) {
      expect_object(c, where + ".classes", {"spin_c", "module", "l_space", "hat_dimension", "stability"});
      ClassReport r;
      r.spin_c = as_int(field(c, "spin_c", where), where);
      r.module = module_from_json(field(c, "module", where));
      r.l_space = as_bool(field(c, "l_space", where), where);
      r.hat_dimension = as_int(field(c, "hat_dimension", where), where);
      const Json& st = field(c, "stability", where);
      expect_object(st, where + ".stability", {"truncation", "truncation_stable", "window_stable"});
      r.truncation = as_int(field(st, "truncation", where), where);
      r.truncation_stable = as_bool(field(st, "truncation_stable", where), where);
      r.window_stable = optional_field<bool>(st, "window_stable", [&](const Json& v) { return as_bool(v, where); });
      s.classes.push_back(std::move(r));
    }
    s.l_space = as_bool(field(*it, "l_space", where), where + ".l_space");
    s.h1 = group_from_json(field(*it, "h1", where), where + ".h1");
    s.class_count_matches = as_bool(field(*it, "class_count_matches", where), where);
    s.hat_total = as_int(field(*it, "hat_total", where), where);
    s.dimension_check = as_bool(field(*it, "dimension_check", where), where);
    s.verified = optional_field<bool>(*it, "verified", [&](const Json& v) { return as_bool(v, where); });
    doc.surgery = std::move(s);
  }
  if (auto it = j.find("diagram"); it != j.end()) {
    const std::string where = "diagram";
    expect_object(*it, where, {"generator_count", "bigons", "complex"});
    DiagramReport d;
    d.generator_count = as_int(field(*it, "generator_count", where), where);
    for (const auto& b : as_array(field(*it, "bigons", where), where + ".bigons")) {
      expect_object(b, where + ".bigons", {"from", "to", "n_w", "n_z"});
      d.bigons.push_back({as_string(field(b, "from", where), where), as_string(field(b, "to", where), where),
                          as_int(field(b, "n_w", where), where), as_int(field(b, "n_z", where), where)});
    }
    for (const auto& g : as_array(field(*it, "complex", where), where + ".complex")) {
      expect_object(g, where + ".complex", {"label", "gr_u", "gr_v", "boundary"});
      d.complex.push_back({as_string(field(g, "label", where), where), as_int(field(g, "gr_u", where), where),
                           as_int(field(g, "gr_v", where), where), as_string(field(g, "boundary", where), where)});
    }
    doc.diagram = std::move(d);
  }
  if (auto it = j.find("h1"); it != j.end()) {
    const std::string where = "h1";
    expect_object(*it, where, {"matrix", "group", "determinant"});
    H1Report h;
    h.matrix = parse_matrix(field(*it, "matrix", where));
    h.group = group_from_json(field(*it, "group", where), where + ".group");
    h.determinant = as_integer(field(*it, "determinant", where), where + ".determinant");
    doc.h1 = std::move(h);
  }
  return doc;
}

}  // namespace floer
