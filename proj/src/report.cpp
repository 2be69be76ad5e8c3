#include "floer/report.hpp"

#include <algorithm>
#include <sstream>

#include "floer/errors.hpp"
#include "floer/surgery.hpp"

namespace floer {

namespace {

std::vector<ClassReport> class_reports(const SurgeryResult& r) {
  std::vector<ClassReport> out;
  for (const auto& [s, cls] : r.classes) {
    ClassReport rep;
    rep.spin_c = s;
    rep.module = cls.module;
    rep.l_space = cls.module.torsion().empty();
    rep.hat_dimension = plus_and_hat_views(cls.module).hat_dimension;
    rep.truncation = cls.truncation;
    rep.truncation_stable = cls.stable;
    out.push_back(std::move(rep));
  }
  return out;
}

bool same_modules(const SurgeryResult& a, const SurgeryResult& b) {
  if (a.classes.size() != b.classes.size()) return false;
  for (const auto& [s, cls] : a.classes) {
    auto it = b.classes.find(s);
    if (it == b.classes.end() || !(it->second.module == cls.module)) return false;
  }
  return true;
}

std::string module_cell(const DvrModule& m) {
  std::string out = m.to_string();
  return out.substr(0, out.rfind(" ["));
}

}  // namespace

InvariantsReport knot_invariants(const BigradedComplex& c) {
  const auto check = validate_complex(c);
  if (!check.ok()) {
    throw InternalError("constructed complex fails validation: " +
                        (check.problems.empty() ? std::string("unknown") : check.problems.front()));
  }
  InvariantsReport rep;
  rep.hfk_hat = hfk_hat(c).dims;
  rep.hfk_minus = hfk_minus(c);
  rep.genus = genus(c);
  rep.fibered = is_fibered(c);
  rep.alexander = euler_characteristic(c);
  return rep;
}

std::vector<GeneratorReport> describe_complex(const BigradedComplex& c) {
  std::vector<GeneratorReport> out;
  for (int i = 0; i < c.size(); ++i) {
    out.push_back({c.label(i), c.grading(i).gr_u, c.grading(i).gr_v, c.boundary_string(i)});
  }
  return out;
}

SurgeryReport surgery_report(const BigradedComplex& c, int n, const RunOptions& options) {
  if (n == 0) throw DomainError("surgery coefficient 0 is not supported (b1 > 0 needs admissibility)");
  const int g = genus(c);
  const bool large_ok = n >= std::max(1, 2 * g - 1);

  DvrOptions dvr;
  dvr.truncation = options.truncation;
  SurgeryOptions cone;
  cone.cone.window_slack = options.window_slack;
  cone.dvr = dvr;

  SurgeryReport rep;
  rep.n = n;
  if (large_ok) {
    const SurgeryResult result = large_surgery_all(c, n, dvr);
    rep.method = "large";
    rep.classes = class_reports(result);
    if (options.verify) {
      rep.verified = same_modules(result, surgery_homology(c, n, cone));
    }
  } else {
    const SurgeryResult result = surgery_homology(c, n, cone);
    SurgeryOptions wider = cone;
    wider.cone.window_slack += 2;
    const SurgeryResult widened = surgery_homology(c, n, wider);
    rep.method = "cone";
    rep.classes = class_reports(result);
    const bool window_stable = same_modules(result, widened);
    for (auto& cls : rep.classes) {
      auto it = widened.classes.find(cls.spin_c);
      cls.window_stable = window_stable && it != widened.classes.end() && it->second.module == cls.module;
    }
    if (options.verify) {
      SurgeryOptions alternate = cone;
      alternate.cone.flip_order = PivotOrder::last_index;
      rep.verified = same_modules(result, surgery_homology(c, n, alternate));
    }
  }
  if (rep.verified && !*rep.verified) throw InternalError("surgery cross-check failed");

  rep.l_space = std::all_of(rep.classes.begin(), rep.classes.end(), [](const ClassReport& r) { return r.l_space; });
  const IntMatrix presentation{{n}};
  rep.h1 = h1_group(presentation);
  rep.class_count_matches = static_cast<long long>(rep.classes.size()) == rep.h1.order();
  std::vector<int> dims;
  for (const auto& cls : rep.classes) dims.push_back(cls.hat_dimension);
  const auto check = hf_dimension_check(presentation, dims);
  rep.hat_total = check.total_dimension;
  rep.dimension_check = check.consistent && rep.l_space == check.all_classes_minimal;
  return rep;
}

DiagramReport diagram_report(const OneOneDiagram& d) {
  const auto check = validate_diagram(d);
  if (!check.ok()) throw DomainError("invalid diagram: " + check.problems.front());
  const auto gens = enumerate_generators(d);
  DiagramReport rep;
  rep.generator_count = static_cast<int>(gens.size());
  for (const auto& b : count_bigons(d)) {
    rep.bigons.push_back({gens[static_cast<std::size_t>(b.from)].label, gens[static_cast<std::size_t>(b.to)].label,
                          b.n_w, b.n_z});
  }
  rep.complex = describe_complex(cfk_from_diagram(d));
  return rep;
}

H1Report h1_report(const IntMatrix& m) {
  H1Report rep;
  rep.matrix = m;
  rep.group = h1_group(m);
  rep.determinant = m.empty() || m.front().empty() ? 1 : determinant(m);
  return rep;
}

std::string to_table(const ResultDocument& doc) {
  std::ostringstream os;
  if (doc.diagram) {
    const auto& d = *doc.diagram;
    os << "diagram: " << d.generator_count << " generators, " << d.bigons.size() << " bigons\n";
    for (const auto& b : d.bigons) {
      os << "  bigon " << b.from << " -> " << b.to << "  (n_w, n_z) = (" << b.n_w << ", " << b.n_z << ")\n";
    }
    os << "  generator   gr_U  gr_V     A  boundary\n";
    for (const auto& g : d.complex) {
      os << "  " << g.label << std::string(g.label.size() < 10 ? 10 - g.label.size() : 1, ' ');
      os.width(6);
      os << g.gr_u;
      os.width(6);
      os << g.gr_v;
      os.width(6);
      os << (g.gr_u - g.gr_v) / 2 << "  " << g.boundary << "\n";
    }
  }
  if (doc.invariants) {
    const auto& inv = *doc.invariants;
    os << "alexander polynomial: " << inv.alexander.to_string() << "\n";
    os << "genus: " << inv.genus << "\n";
    os << "fibered: " << (inv.fibered ? "yes" : "no") << "\n";
    os << "HFK-hat (m, s): dim\n";
    for (auto it = inv.hfk_hat.rbegin(); it != inv.hfk_hat.rend(); ++it) {
      os << "  (" << it->first.first << ", " << it->first.second << "): " << it->second << "\n";
    }
    os << "HFK-minus: " << inv.hfk_minus.to_string('U') << "\n";
  }
  if (doc.surgery) {
    const auto& s = *doc.surgery;
    os << "surgery n = " << s.n << " (" << s.method << ")\n";
    os << "  class  module                             hat  N     stable\n";
    for (const auto& c : s.classes) {
      std::string cell = module_cell(c.module);
      if (cell.size() < 34) cell.resize(34, ' ');
      os << "  ";
      os.width(5);
      os << c.spin_c << "  " << cell << " ";
      os.width(3);
      os << c.hat_dimension << "  ";
      os.width(4);
      os << c.truncation << "  " << (c.truncation_stable ? "N+4" : "-");
      if (c.window_stable) os << (*c.window_stable ? " window+2" : " -");
      os << "\n";
    }
    os << "  gradings relative, tower generator at 0\n";
    os << "  L-space: " << (s.l_space ? "yes" : "no") << "\n";
    os << "  H1: " << s.h1.to_string() << " (" << (s.class_count_matches ? "matches" : "does not match")
       << " the class count)\n";
    os << "  total hat dimension: " << s.hat_total << (s.dimension_check ? " (consistent with |H1|)" : " (INCONSISTENT)")
       << "\n";
    if (s.verified) os << "  cross-check: " << (*s.verified ? "agrees" : "DISAGREES") << "\n";
  }
  if (doc.h1) {
    const auto& h = *doc.h1;
    os << "H1 = " << h.group.to_string() << "\n";
    os << "determinant: " << h.determinant << "\n";
  }
  return os.str();
}

}  // namespace floer
