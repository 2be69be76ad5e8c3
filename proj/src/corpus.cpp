#include "floer/corpus.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "floer/eliminate.hpp"
#include "floer/errors.hpp"
#include "floer/h1.hpp"
#include "floer/json_io.hpp"
#include "floer/knots.hpp"
#include "floer/module.hpp"
#include "floer/one_one.hpp"
#include "floer/report.hpp"
#include "floer/specialize.hpp"
#include "floer/surgery.hpp"

namespace floer {

namespace {

using Check = std::function<std::string()>;

LaurentPoly trefoil_polynomial() { return LaurentPoly({{1, 1}, {0, -1}, {-1, 1}}); }

const BigradedComplex& left_trefoil() {
  static const BigradedComplex c = cfk_from_diagram(trefoil_diagram());
  return c;
}

int index_in(const OneVarComplex& c, const std::string& label) {
  for (int i = 0; i < c.size(); ++i) {
    if (c.labels[static_cast<std::size_t>(i)] == label) return i;
  }
  throw InternalError("no generator " + label);
}

int index_in(const BigradedComplex& c, const std::string& label) {
  auto i = c.index_of(label);
  if (!i) throw InternalError("no generator " + label);
  return *i;
}

std::string expect(bool ok, const std::string& what) { return ok ? std::string() : what; }

std::string module_is(const DvrModule& got, const std::vector<int>& free, const std::vector<TorsionSummand>& torsion) {
  if (got.free_gradings() == free && got.torsion() == torsion) return {};
  return "got " + got.to_string();
}

/// Column of the inclusion for the single surviving generator, as label -> coefficient.
std::map<std::string, WPoly> surviving_cycle(const OneVarComplex& c) {
  const auto red = gaussian_eliminate(c);
  if (red.reduced.size() != 1) throw InternalError("expected one surviving generator");
  std::map<std::string, WPoly> out;
  for (const auto& [row, v] : red.inclusion.column(0)) out[c.labels[static_cast<std::size_t>(row)]] = v;
  return out;
}

std::string surgery_matches(const BigradedComplex& c, int n,
                            const std::map<int, std::pair<std::vector<int>, std::vector<TorsionSummand>>>& want) {
  SurgeryOptions base;
  SurgeryOptions wide;
  wide.cone.window_slack = 2;
  const auto r = surgery_homology(c, n, base);
  const auto r2 = surgery_homology(c, n, wide);
  if (r.classes.size() != want.size()) return "wrong number of classes";
  for (const auto& [s, expected] : want) {
    auto it = r.classes.find(s);
    if (it == r.classes.end()) return "class " + std::to_string(s) + " missing";
    if (auto e = module_is(it->second.module, expected.first, expected.second); !e.empty()) {
      return "class " + std::to_string(s) + ": " + e;
    }
    if (!it->second.stable) return "class " + std::to_string(s) + " not stable under N -> N + 4";
    if (!(r2.classes.at(s).module == it->second.module)) return "class " + std::to_string(s) + " changes with window + 2";
  }
  return {};
}

std::string round_trip(const ResultDocument& doc) {
  const Json j = emit(doc);
  const ResultDocument back = parse_result(Json::parse(j.dump()));
  return expect(back == doc && emit(back) == j, "JSON round trip changed the document");
}

std::set<std::pair<char, int>> column_set(const ConeClass& cls) {
  std::set<std::pair<char, int>> out;
  for (const auto& col : cls.columns) out.insert({col.kind, col.s});
  return out;
}

std::vector<std::pair<std::string, Check>> cases() {
  std::vector<std::pair<std::string, Check>> out;
  auto add = [&](std::string name, Check check) { out.emplace_back(std::move(name), std::move(check)); };

  add("trefoil diagram has generators a, b, c", [] {
    const auto v = validate_diagram(trefoil_diagram());
    std::vector<std::string> labels;
    for (const auto& g : enumerate_generators(trefoil_diagram())) labels.push_back(g.label);
    return expect(v.ok() && v.generator_count == 3 && labels == std::vector<std::string>{"a", "b", "c"},
                  "diagram invalid or wrong generators");
  });
  add("trefoil diagram bigons", [] {
    const auto b = count_bigons(trefoil_diagram());
    const std::vector<Bigon> want{{0, 1, 1, 0}, {2, 1, 0, 1}};
    return expect(b == want, "expected exactly a->b (1,0) and c->b (0,1)");
  });
  add("trefoil diagram complex and gradings", [] {
    const auto& c = left_trefoil();
    const int a = index_in(c, "a"), b = index_in(c, "b"), cc = index_in(c, "c");
    const bool diff = c.differential.at(b, a) == PolyUV::u_power(1) && c.differential.at(b, cc) == PolyUV::v_power(1) &&
                      c.differential.column(b).empty() && c.differential.nnz() == 2;
    const bool gr = c.grading(a) == Bigrading{0, 2} && c.grading(b) == Bigrading{1, 1} &&
                    c.grading(cc) == Bigrading{2, 0} && c.alexander(a) == -1 && c.alexander(b) == 0 &&
                    c.alexander(cc) == 1;
    return expect(diff && gr && validate_complex(c).ok(), "complex differs from da = Ub, dc = Vb");
  });
  add("trefoil homology over F[U,V]", [] {
    const auto& c = left_trefoil();
    const auto h = homology_uv_window(c, -6, 2, -6, 2);
    GradedVectorSpace want;
    for (int p = -6; p <= 0; p += 2) {
      for (int q = -6; q <= 0; q += 2) want.dims[{p, q}] = 1;
    }
    want.dims[{1, 1}] = 1;
    const int a = index_in(c, "a"), b = index_in(c, "b"), cc = index_in(c, "c");
    PolyUV boundary = c.differential.at(b, a) * PolyUV::v_power(1);
    boundary += c.differential.at(b, cc) * PolyUV::u_power(1);
    return expect(h == want && boundary.is_zero(), "expected F[U,V](0,0) + F(1,1) with cycle Va + Uc");
  });
  add("dual of the trefoil complex", [] {
    const auto d = dualize(left_trefoil());
    const int a = index_in(d, "a*"), b = index_in(d, "b*"), c = index_in(d, "c*");
    return expect(d.differential.at(a, b) == PolyUV::u_power(1) && d.differential.at(c, b) == PolyUV::v_power(1) &&
                      d.differential.nnz() == 2 && d.grading(a) == Bigrading{0, -2} &&
                      d.grading(b) == Bigrading{-1, -1} && d.grading(c) == Bigrading{-2, 0},
                  "expected db* = Ua* + Vc*");
  });
  add("U = V = 0 specialization", [] {
    const auto c0 = set_uv_zero(left_trefoil());
    const auto h = homology_f2(c0);
    return expect(c0.size() == 3 && c0.differential.is_zero() && h.total() == 3 && h.at(0, 2) == 1 &&
                      h.at(1, 1) == 1 && h.at(2, 0) == 1,
                  "expected three generators with zero differential");
  });
  add("V = 0 specialization", [] {
    const auto v0 = specialize_one_var(left_trefoil(), SpecializeMode::V0);
    const int a = index_in(v0, "a"), b = index_in(v0, "b");
    return expect(v0.differential.nnz() == 1 && v0.differential.at(b, a) == WPoly::monomial(1),
                  "expected da = Ub only");
  });
  add("V = 1 homology generated by a + Uc", [] {
    const auto v1 = specialize_one_var(left_trefoil(), SpecializeMode::V1);
    const auto cycle = surviving_cycle(v1);
    const std::map<std::string, WPoly> want{{"a", WPoly::one()}, {"c", WPoly::monomial(1)}};
    const auto h = homology_dvr(v1).module;
    return expect(cycle == want && h.free_rank() == 1 && h.torsion().empty(), "expected F[U] generated by a + Uc");
  });
  add("U = 1 homology generated by c + Va", [] {
    const auto u1 = specialize_one_var(left_trefoil(), SpecializeMode::U1);
    const auto cycle = surviving_cycle(u1);
    const std::map<std::string, WPoly> want{{"a", WPoly::monomial(1)}, {"c", WPoly::one()}};
    return expect(cycle == want, "expected F[V] generated by c + Va");
  });
  add("A_0 generators and differential", [] {
    const auto a0 = alexander_summand(left_trefoil(), 0);
    const int va = index_in(a0, "V*a"), b = index_in(a0, "b"), uc = index_in(a0, "U*c");
    return expect(a0.size() == 3 && a0.differential.at(b, va) == WPoly::monomial(1) &&
                      a0.differential.at(b, uc) == WPoly::monomial(1) && a0.differential.nnz() == 2,
                  "expected d(Va) = Wb and d(Uc) = Wb");
  });
  add("A_-1 generators and differential", [] {
    const auto a = alexander_summand(left_trefoil(), -1);
    const int x = index_in(a, "a"), ub = index_in(a, "U*b"), u2c = index_in(a, "U^2*c");
    return expect(a.size() == 3 && a.differential.at(ub, x) == WPoly::one() &&
                      a.differential.at(ub, u2c) == WPoly::monomial(1) && a.differential.nnz() == 2,
                  "expected da = Ub and d(U^2c) = W Ub");
  });
  add("A_0 homology is F[W](0) + F(1)", [] {
    auto a0 = alexander_summand(left_trefoil(), 0);
    a0.mode = GradingMode::relative;
    DvrOptions opt;
    opt.truncation = 8;
    const auto r = homology_dvr(a0, opt);
    if (auto e = module_is(r.module, {0}, {{1, 1}}); !e.empty()) return e;
    return expect(r.stable && r.module.mode() == GradingMode::relative && d_invariant(r.module) == 0,
                  "not stable or not relative");
  });
  add("A_-1 homology is a single F[W]", [] {
    const auto r = homology_dvr(alexander_summand(left_trefoil(), -1));
    return expect(r.module.free_rank() == 1 && r.module.torsion().empty(), "got " + r.module.to_string());
  });
  add("d-invariant of S^3", [] {
    const DvrModule s3({0}, {});
    const auto plus = plus_and_hat_views(s3);
    return expect(d_invariant(s3) == 0 && plus.tower_bottoms == std::vector<int>{2} && plus.hat_dimension == 1,
                  "expected d = 0, plus tower at 2, hat dimension 1");
  });
  add("mirror of the L-space trefoil is the diagram complex", [] {
    const auto m = build(KnotSpec::mirror(KnotSpec::lspace(trefoil_polynomial())));
    return expect(find_isomorphism(m, left_trefoil()).has_value(), "not isomorphic");
  });
  add("reverse leaves the complex unchanged", [] {
    const auto k = KnotSpec::alternating(LaurentPoly({{1, -1}, {0, 3}, {-1, -1}}), 0);
    return expect(same_structure(build(KnotSpec::reverse(k)), build(k)), "reverse changed the complex");
  });
  add("HFK-hat of the left-handed trefoil", [] {
    const std::map<std::pair<int, int>, int> want{{{0, -1}, 1}, {{1, 0}, 1}, {{2, 1}, 1}};
    return expect(hfk_hat(left_trefoil()).dims == want, "wrong table");
  });
  add("HFK-minus of the left-handed trefoil", [] { return module_is(hfk_minus(left_trefoil()), {2}, {{1, 1}}); });
  add("Euler characteristic of the left-handed trefoil", [] {
    return expect(euler_characteristic(left_trefoil()) == trefoil_polynomial(), "expected t - 1 + t^-1");
  });
  add("B_0 homology generated by Va + Uc", [] {
    const auto b0 = b_summand(left_trefoil(), 0);
    const auto cycle = surviving_cycle(b0);
    const std::map<std::string, WPoly> want{{"V*a", WPoly::one()}, {"V^-1*c", WPoly::monomial(1)}};
    const auto h = homology_dvr(b0).module;
    return expect(cycle == want && h.free_rank() == 1 && h.torsion().empty(), "expected F[W] generated by Va + Uc");
  });
  add("V maps B_-1 isomorphically to B_0", [] {
    const auto bm = b_summand(left_trefoil(), -1);
    const auto b0 = b_summand(left_trefoil(), 0);
    return expect(bm.gradings == b0.gradings && bm.differential == b0.differential, "B_-1 and B_0 differ");
  });
  add("large surgery n = 3 per class", [] {
    if (auto e = module_is(large_surgery(left_trefoil(), 3, 0).module, {0}, {{1, 1}}); !e.empty()) return e;
    for (int s : {-1, 1}) {
      if (auto e = module_is(large_surgery(left_trefoil(), 3, s).module, {0}, {}); !e.empty()) return e;
    }
    return std::string();
  });
  add("cone columns for n = 1 and n = -1", [] {
    const auto p = build_cone(left_trefoil(), 1);
    const auto m = build_cone(left_trefoil(), -1);
    const std::set<std::pair<char, int>> want_p{{'A', 0}};
    const std::set<std::pair<char, int>> want_m{{'B', -1}, {'A', 0}, {'B', 0}};
    if (p.classes.size() != 1 || m.classes.size() != 1) return std::string("expected one class");
    if (column_set(p.classes[0]) != want_p) return std::string("n = 1 columns wrong");
    if (column_set(m.classes[0]) != want_m) return std::string("n = -1 columns wrong");
    int flips = 0, iotas = 0;
    for (const auto& e : m.classes[0].edges) {
      const auto& from = m.classes[0].columns[static_cast<std::size_t>(e.from)];
      const auto& to = m.classes[0].columns[static_cast<std::size_t>(e.to)];
      if (e.flip && from.s == 0 && to.s == -1) ++flips;
      if (!e.flip && from.s == 0 && to.s == 0) ++iotas;
    }
    return expect(flips == 1 && iotas == 1 && m.classes[0].edges.size() == 2, "n = -1 edges wrong");
  });
  add("+1 surgery on the left-handed trefoil", [] {
    return surgery_matches(left_trefoil(), 1, {{0, {{0}, {{1, 1}}}}});
  });
  add("+3 surgery on the left-handed trefoil", [] {
    return surgery_matches(left_trefoil(), 3, {{0, {{0}, {{1, 1}}}}, {-1, {{0}, {}}}, {1, {{0}, {}}}});
  });
  add("+1 surgery is not an L-space", [] {
    return expect(!is_lspace_result(surgery_homology(left_trefoil(), 1)), "reported an L-space");
  });
  add("H1 of the RP^3 diagram and its stabilization", [] {
    const IntMatrix m{{2}};
    const IntMatrix st{{2, 0}, {0, 1}};
    const AbelianGroup z2{{2}, 0};
    return expect(h1_group(m) == z2 && stabilize(m) == st && h1_group(st) == z2, "expected Z/2");
  });
  add("HF dimension bound for +1 and +3 surgery", [] {
    const auto r1 = hf_dimension_check({{1}}, {3});
    const auto r3 = hf_dimension_check({{3}}, {3, 1, 1});
    return expect(r1.bound_holds && !r1.equality && !r1.all_classes_minimal && r1.consistent && r3.bound_holds &&
                      r3.total_dimension == 5 && r3.order == 3 && r3.consistent,
                  "dimension bound check failed");
  });
  add("hfk report for the mirrored L-space trefoil", [] {
    const auto k = KnotSpec::mirror(KnotSpec::lspace(trefoil_polynomial()));
    ResultDocument doc;
    doc.invariants = knot_invariants(build(k));
    const std::map<std::pair<int, int>, int> want{{{0, -1}, 1}, {{1, 0}, 1}, {{2, 1}, 1}};
    if (doc.invariants->hfk_hat != want) return std::string("wrong HFK-hat table");
    return round_trip(doc);
  });
  add("surgery reports for the left-handed trefoil", [] {
    const auto k = build(KnotSpec::mirror(KnotSpec::lspace(trefoil_polynomial())));
    RunOptions opts;
    opts.verify = true;
    for (int n : {1, 3}) {
      ResultDocument doc;
      doc.surgery = surgery_report(k, n, opts);
      const auto& s = *doc.surgery;
      if (s.l_space || !s.class_count_matches || !s.dimension_check || !s.verified.value_or(false)) {
        return "n = " + std::to_string(n) + " report inconsistent";
      }
      const auto& zero = *std::find_if(s.classes.begin(), s.classes.end(), [](const auto& c) { return c.spin_c == 0; });
      if (auto e = module_is(zero.module, {0}, {{1, 1}}); !e.empty()) return e;
      if (s.hat_total != (n == 1 ? 3 : 5)) return "n = " + std::to_string(n) + " hat total wrong";
      if (auto e = round_trip(doc); !e.empty()) return e;
    }
    return std::string();
  });
  add("diagram report for the trefoil", [] {
    ResultDocument doc;
    doc.diagram = diagram_report(trefoil_diagram());
    doc.invariants = knot_invariants(left_trefoil());
    const std::vector<BigonReport> want{{"a", "b", 1, 0}, {"c", "b", 0, 1}};
    if (doc.diagram->bigons != want) return std::string("wrong bigons");
    if (doc.diagram->complex[0].boundary != "Ub" || doc.diagram->complex[2].boundary != "Vb") {
      return std::string("wrong boundaries");
    }
    return round_trip(doc);
  });
  add("h1 report for the RP^3 diagram", [] {
    ResultDocument doc;
    doc.h1 = h1_report({{2}});
    if (doc.h1->group.to_string() != "Z/2" || doc.h1->determinant != 2) return std::string("expected Z/2");
    return round_trip(doc);
  });
  return out;
}

}  // namespace

std::vector<CorpusCase> run_corpus() {
  std::vector<CorpusCase> results;
  for (auto& [name, check] : cases()) {
    CorpusCase c;
    c.name = name;
    try {
      c.detail = check();
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    c.passed = c.detail.empty();
    results.push_back(std::move(c));
  }
  return results;
}

}  // namespace floer
