#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>

#include "floer/corpus.hpp"
#include "floer/errors.hpp"
#include "floer/json_io.hpp"
#include "floer/report.hpp"
#include "floer/surgery.hpp"

using namespace floer;
namespace fs = std::filesystem;

namespace {

const std::string data_dir = FLOER_DATA_DIR;

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(FLOER_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe.get())) r.out.append(buf, n);
  const int status = pclose(pipe.release());
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "floer_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << content;
  return p;
}

ResultDocument hfk_doc(const std::string& spec) {
  ResultDocument doc;
  doc.invariants = knot_invariants(build(parse_knot_document(Json::parse(spec)).knot));
  return doc;
}

}  // namespace

TEST_CASE("knot spec documents") {
  const auto doc = parse_knot_document(Json::parse(R"({"knot": {"type": "lspace", "alexander": [[1,1],[0,-1],[-1,1]]},
                                                       "options": {"truncation": 20, "window_slack": 1, "debug": true}})"));
  CHECK(doc.knot.kind == KnotSpec::Kind::lspace);
  CHECK(doc.options.truncation == 20);
  CHECK(doc.options.window_slack == 1);
  CHECK(doc.options.debug);
  const auto j = knot_spec_to_json(doc.knot);
  CHECK(knot_spec_to_json(parse_knot_spec(j)) == j);

  CHECK_THROWS_AS(parse_knot_document(Json::parse(R"({"knot": {"type": "torus"}})")), SchemaError);
  CHECK_THROWS_AS(parse_knot_document(Json::parse(R"({"knot": {"type": "lspace"}})")), SchemaError);
  CHECK_THROWS_AS(parse_knot_document(Json::parse(R"({"knot": {"type": "lspace", "alexander": [[1, 0.5]]}})")),
                  SchemaError);
  CHECK_THROWS_AS(parse_knot_document(Json::parse(R"({"knot": {"type": "lspace", "alexander": []}})")), SchemaError);
  CHECK_THROWS_AS(parse_knot_document(Json::parse(R"({"knot": {"type": "lspace", "alexander": [[0,1]], "x": 1}})")),
                  SchemaError);
  CHECK_THROWS_AS(parse_knot_document(Json::parse(R"({"spec": {}})")), SchemaError);
  CHECK_THROWS_AS(parse_knot_document(Json::parse(R"({"knot": {"type": "sum", "summands": []}})")), SchemaError);
  CHECK_THROWS_AS(parse_knot_document(Json::parse(R"({"knot": {"type": "lspace", "alexander": [[0,1]]},
                                                      "options": {"truncation": -1}})")),
                  SchemaError);
}

TEST_CASE("diagram paths resolve relative to the spec file") {
  const auto doc = load_knot_document(data_dir + "/specs/minus_trefoil_diagram.json");
  REQUIRE(doc.knot.kind == KnotSpec::Kind::one_one);
  CHECK(doc.knot.diagram->labels == std::vector<std::string>{"a", "b", "c"});
  CHECK(find_isomorphism(build(doc.knot), build(load_knot_document(data_dir + "/specs/minus_trefoil.json").knot)));
  CHECK_THROWS_AS(load_knot_document(data_dir + "/specs/missing.json"), SchemaError);
}

TEST_CASE("matrix documents") {
  CHECK(parse_matrix(Json::parse(R"({"matrix": [[2]]})")) == IntMatrix{{2}});
  CHECK(parse_matrix(Json::parse("[[6, 1], [0, 2]]")) == IntMatrix{{6, 1}, {0, 2}});
  CHECK(parse_matrix(Json::parse(R"({"matrix": [[]]})")).empty());
  CHECK_THROWS_AS(parse_matrix(Json::parse("[[1, 2]]")), SchemaError);
  CHECK_THROWS_AS(parse_matrix(Json::parse("[[1.5]]")), SchemaError);
  CHECK_THROWS_AS(parse_matrix(Json::parse(R"({"rows": [[1]]})")), SchemaError);
}

TEST_CASE("hfk command examples") {
  const auto rh = hfk_doc(R"({"knot": {"type": "lspace", "alexander": [[1,1],[0,-1],[-1,1]]}})");
  CHECK(rh.invariants->genus == 1);
  CHECK(rh.invariants->fibered);
  CHECK(rh.invariants->hfk_hat == std::map<std::pair<int, int>, int>{{{0, 1}, 1}, {{-1, 0}, 1}, {{-2, -1}, 1}});
  const auto lh = hfk_doc(R"({"knot": {"type": "mirror", "of": {"type": "lspace", "alexander": [[1,1],[0,-1],[-1,1]]}}})");
  CHECK(lh.invariants->hfk_hat == std::map<std::pair<int, int>, int>{{{0, -1}, 1}, {{1, 0}, 1}, {{2, 1}, 1}});
  const auto u = hfk_doc(R"({"knot": {"type": "alternating", "alexander": [[0,1]], "signature": 0}})");
  CHECK(u.invariants->genus == 0);
  CHECK(u.invariants->hfk_hat == std::map<std::pair<int, int>, int>{{{0, 0}, 1}});
  CHECK(u.invariants->alexander == LaurentPoly::one());
}

TEST_CASE("surgery command examples") {
  const auto minus = build(load_knot_document(data_dir + "/specs/minus_trefoil.json").knot);
  const auto r1 = surgery_report(minus, 1);
  REQUIRE(r1.classes.size() == 1);
  CHECK(r1.classes[0].module == DvrModule({0}, {{1, 1}}, GradingMode::relative));
  const auto r3 = surgery_report(minus, 3);
  REQUIRE(r3.classes.size() == 3);
  CHECK(r3.classes[0].module == DvrModule({0}, {}, GradingMode::relative));
  CHECK(r3.classes[1].module == DvrModule({0}, {{1, 1}}, GradingMode::relative));
  CHECK(r3.classes[2].module == DvrModule({0}, {}, GradingMode::relative));
  const auto u = surgery_report(build(load_knot_document(data_dir + "/specs/unknot.json").knot), 5);
  CHECK(u.classes.size() == 5);
  CHECK(u.l_space);
}

TEST_CASE("result documents round-trip") {
  std::vector<ResultDocument> docs;
  docs.push_back(hfk_doc(R"({"knot": {"type": "alternating", "alexander": [[1,-1],[0,3],[-1,-1]], "signature": 0}})"));
  ResultDocument s;
  s.surgery = surgery_report(build(load_knot_document(data_dir + "/specs/t34.json").knot), 3, {0, 0, true});
  docs.push_back(s);
  ResultDocument d;
  d.diagram = diagram_report(figure_eight_diagram());
  d.invariants = knot_invariants(cfk_from_diagram(figure_eight_diagram()));
  docs.push_back(d);
  ResultDocument h;
  h.h1 = h1_report({{6, 1}, {0, 2}});
  docs.push_back(h);
  docs.emplace_back();
  for (const auto& doc : docs) {
    const Json j = emit(doc);
    CHECK(parse_result(Json::parse(j.dump())) == doc);
    CHECK(emit(parse_result(j)) == j);
  }
  CHECK_THROWS_AS(parse_result(Json::parse(R"({"bogus": 1})")), SchemaError);
  CHECK_THROWS_AS(parse_result(Json::parse(R"({"h1": {"matrix": [[2]], "group": {"free_rank": 0}, "determinant": 2}})")),
                  SchemaError);
  CHECK(!to_table(docs[1]).empty());
}

TEST_CASE("regression corpus") {
  for (const auto& c : run_corpus()) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
}

TEST_CASE("command line: outputs and exit codes") {
  const auto hfk = run_cli("hfk " + data_dir + "/specs/minus_trefoil.json");
  CHECK(hfk.code == 0);
  const auto doc = parse_result(Json::parse(hfk.out));
  CHECK(doc.invariants->hfk_minus == DvrModule({2}, {{1, 1}}));

  const auto surgery = run_cli("--table surgery " + data_dir + "/specs/minus_trefoil.json --n 3 --verify");
  CHECK(surgery.code == 0);
  CHECK(surgery.out.find("cross-check: agrees") != std::string::npos);

  const auto neg = run_cli("--window-slack 1 --truncation 30 surgery " + data_dir + "/specs/figure_eight.json --n -2");
  CHECK(neg.code == 0);
  CHECK(parse_result(Json::parse(neg.out)).surgery->method == "cone");

  const auto diagram = run_cli("diagram " + data_dir + "/trefoil_diagram.json");
  CHECK(diagram.code == 0);
  CHECK(parse_result(Json::parse(diagram.out)).diagram->bigons.size() == 2);

  const auto h1 = run_cli("--table h1 " + data_dir + "/matrices/rp3.json");
  CHECK(h1.code == 0);
  CHECK(h1.out.find("Z/2") != std::string::npos);

  CHECK(run_cli("corpus").code == 0);

  CHECK(run_cli("hfk /nonexistent/spec.json").code == 2);
  CHECK(run_cli("hfk " + write_temp("bad.json", "{not json").string()).code == 2);
  CHECK(run_cli("diagram " + write_temp("decimal.json", R"({"beta": [[0.5, "1/2"]], "translation": [0, 1],
                                                           "w": ["1/4", "1/2"], "z": ["3/4", "1/2"]})")
                                     .string())
            .code == 2);
  CHECK(run_cli("surgery " + data_dir + "/specs/unknot.json").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("surgery " + data_dir + "/specs/unknot.json --n 0").code == 3);
  CHECK(run_cli("hfk " + write_temp("notstair.json", R"({"knot": {"type": "lspace", "alexander": [[1,-1],[0,3],[-1,-1]]}})")
                             .string())
            .code == 3);
  CHECK(run_cli("diagram " + write_temp("twisted.json", R"({"beta": [["1/2", "1/2"]], "translation": [1, 2],
                                                           "w": ["1/4", "1/2"], "z": ["3/4", "1/2"]})")
                                     .string())
            .code == 3);
}
