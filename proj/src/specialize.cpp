#include "floer/specialize.hpp"

#include <algorithm>

#include "floer/errors.hpp"

namespace floer {

namespace {

std::string power_label(char var, int k, const std::string& base) {
  if (k == 0) return base;
  if (k == 1) return std::string(1, var) + "*" + base;
  return std::string(1, var) + "^" + std::to_string(k) + "*" + base;
}

// Builds a one-variable complex from per-generator gradings and a rule sending
// each monomial term to a W-exponent (or -1 to drop it).
template <class TermRule>
OneVarComplex collapse(const BigradedComplex& c, std::vector<std::string> labels, std::vector<int> gradings,
                       char var, TermRule rule) {
  OneVarComplex out(std::move(labels), std::move(gradings), var);
  for (int x = 0; x < c.size(); ++x) {
    for (const auto& [y, coeff] : c.differential.column(x)) {
      for (const auto& m : coeff.terms()) {
        const int k = rule(x, y, m);
        if (k >= 0) out.add_term(x, y, WPoly::monomial(k));
      }
    }
  }
  return out;
}

std::vector<std::string> plain_labels(const BigradedComplex& c) {
  std::vector<std::string> out;
  for (const auto& g : c.generators) out.push_back(g.label);
  return out;
}

}  // namespace

SpecializeMode parse_specialize_mode(const std::string& name) {
  if (name == "UV0") return SpecializeMode::UV0;
  if (name == "V0") return SpecializeMode::V0;
  if (name == "U0") return SpecializeMode::U0;
  if (name == "V1") return SpecializeMode::V1;
  if (name == "U1") return SpecializeMode::U1;
  if (name == "invertV") return SpecializeMode::invertV;
  if (name == "invertU") return SpecializeMode::invertU;
  throw SchemaError("unknown specialization mode '" + name + "'");
}

std::string to_string(SpecializeMode mode) {
  switch (mode) {
    case SpecializeMode::UV0: return "UV0";
    case SpecializeMode::V0: return "V0";
    case SpecializeMode::U0: return "U0";
    case SpecializeMode::V1: return "V1";
    case SpecializeMode::U1: return "U1";
    case SpecializeMode::invertV: return "invertV";
    case SpecializeMode::invertU: return "invertU";
  }
  return "?";
}

BigradedComplex set_uv_zero(const BigradedComplex& c) {
  BigradedComplex out(c.generators);
  for (int x = 0; x < c.size(); ++x) {
    for (const auto& [y, coeff] : c.differential.column(x)) {
      if (coeff.has_constant_term()) out.add_term(x, y, PolyUV::one());
    }
  }
  return out;
}

OneVarComplex specialize_one_var(const BigradedComplex& c, SpecializeMode mode, int s) {
  std::vector<int> gr_u;
  std::vector<int> gr_v;
  for (const auto& g : c.generators) {
    gr_u.push_back(g.grading.gr_u);
    gr_v.push_back(g.grading.gr_v);
  }
  switch (mode) {
    case SpecializeMode::V0:
      return collapse(c, plain_labels(c), gr_u, 'U',
                      [](int, int, const Monomial& m) { return m.v_exp == 0 ? m.u_exp : -1; });
    case SpecializeMode::U0:
      return collapse(c, plain_labels(c), gr_v, 'V',
                      [](int, int, const Monomial& m) { return m.u_exp == 0 ? m.v_exp : -1; });
    case SpecializeMode::V1:
      return collapse(c, plain_labels(c), gr_u, 'U', [](int, int, const Monomial& m) { return m.u_exp; });
    case SpecializeMode::U1:
      return collapse(c, plain_labels(c), gr_v, 'V', [](int, int, const Monomial& m) { return m.v_exp; });
    case SpecializeMode::invertV:
      return b_summand(c, s);
    case SpecializeMode::invertU:
      return u_localized_summand(c, s);
    case SpecializeMode::UV0:
      break;
  }
  throw DomainError("UV0 specialization is bigraded; use set_uv_zero");
}

SpecializedComplex specialize(const BigradedComplex& c, SpecializeMode mode, int s) {
  if (mode == SpecializeMode::UV0) return set_uv_zero(c);
  return specialize_one_var(c, mode, s);
}

SpecializedComplex specialize(const BigradedComplex& c, const std::string& mode, int s) {
  return specialize(c, parse_specialize_mode(mode), s);
}

int iota_v_exponent(const BigradedComplex& c, int i, int s) { return std::max(c.alexander(i) - s, 0); }

int iota_u_exponent(const BigradedComplex& c, int i, int s) { return std::max(s - c.alexander(i), 0); }

OneVarComplex alexander_summand(const BigradedComplex& c, int s) {
  std::vector<std::string> labels;
  std::vector<int> gradings;
  for (int i = 0; i < c.size(); ++i) {
    const int a = iota_v_exponent(c, i, s);
    const int b = iota_u_exponent(c, i, s);
    labels.push_back(a > 0 ? power_label('U', a, c.label(i)) : power_label('V', b, c.label(i)));
    gradings.push_back(c.grading(i).gr_u - 2 * a);
  }
  return collapse(c, std::move(labels), std::move(gradings), 'W', [&](int x, int, const Monomial& m) {
    return std::min(iota_v_exponent(c, x, s) + m.u_exp, iota_u_exponent(c, x, s) + m.v_exp);
  });
}

OneVarComplex b_summand(const BigradedComplex& c, int s) {
  std::vector<std::string> labels;
  std::vector<int> gradings;
  for (int i = 0; i < c.size(); ++i) {
    labels.push_back(power_label('V', s - c.alexander(i), c.label(i)));
    gradings.push_back(c.grading(i).gr_u);
  }
  return collapse(c, std::move(labels), std::move(gradings), 'W',
                  [](int, int, const Monomial& m) { return m.u_exp; });
}

OneVarComplex u_localized_summand(const BigradedComplex& c, int s) {
  std::vector<std::string> labels;
  std::vector<int> gradings;
  for (int i = 0; i < c.size(); ++i) {
    labels.push_back(power_label('U', c.alexander(i) - s, c.label(i)));
    gradings.push_back(c.grading(i).gr_v + 2 * s);
  }
  return collapse(c, std::move(labels), std::move(gradings), 'W',
                  [](int, int, const Monomial& m) { return m.v_exp; });
}

}  // namespace floer
