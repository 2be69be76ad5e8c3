#include "floer/knots.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "floer/errors.hpp"
#include "floer/one_one.hpp"
#include "floer/specialize.hpp"

namespace floer {

LaurentPoly::LaurentPoly(const std::vector<std::pair<int, long long>>& terms) {
  for (const auto& [e, c] : terms) add(e, c);
}

void LaurentPoly::add(int exponent, long long c) {
  if (c == 0) return;
  auto& slot = coeffs_[exponent];
  slot += c;
  if (slot == 0) coeffs_.erase(exponent);
}

long long LaurentPoly::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

int LaurentPoly::max_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
int LaurentPoly::min_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

long long LaurentPoly::at_one() const {
  long long s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

bool LaurentPoly::is_symmetric() const { return *this == inverted(); }

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[-e] = c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add(e, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [e1, c1] : a.coeffs_) {
    for (const auto& [e2, c2] : b.coeffs_) out.add(e1 + e2, c1 * c2);
  }
  return out;
}

std::vector<std::pair<int, long long>> LaurentPoly::terms() const {
  std::vector<std::pair<int, long long>> out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out.emplace_back(it->first, it->second);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto [e, c] = *it;
    const long long mag = std::llabs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

KnotSpec KnotSpec::lspace(LaurentPoly delta) {
  KnotSpec k;
  k.kind = Kind::lspace;
  k.alexander = std::move(delta);
  return k;
}

KnotSpec KnotSpec::alternating(LaurentPoly delta, int signature) {
  KnotSpec k;
  k.kind = Kind::alternating;
  k.alexander = std::move(delta);
  k.signature = signature;
  return k;
}

KnotSpec KnotSpec::sum(std::vector<KnotSpec> summands) {
  KnotSpec k;
  k.kind = Kind::sum;
  k.children = std::move(summands);
  return k;
}

KnotSpec KnotSpec::mirror(KnotSpec of) {
  KnotSpec k;
  k.kind = Kind::mirror;
  k.children.push_back(std::move(of));
  return k;
}

KnotSpec KnotSpec::reverse(KnotSpec of) {
  KnotSpec k;
  k.kind = Kind::reverse;
  k.children.push_back(std::move(of));
  return k;
}

KnotSpec KnotSpec::one_one(std::shared_ptr<const OneOneDiagram> diagram, std::string path) {
  KnotSpec k;
  k.kind = Kind::one_one;
  k.diagram = std::move(diagram);
  k.diagram_path = std::move(path);
  return k;
}

std::string to_string(KnotSpec::Kind kind) {
  switch (kind) {
    case KnotSpec::Kind::lspace: return "lspace";
    case KnotSpec::Kind::alternating: return "alternating";
    case KnotSpec::Kind::sum: return "sum";
    case KnotSpec::Kind::mirror: return "mirror";
    case KnotSpec::Kind::reverse: return "reverse";
    case KnotSpec::Kind::one_one: return "one_one";
  }
  return "?";
}

BigradedComplex staircase_from_alexander(const LaurentPoly& delta) {
  const auto terms = delta.terms();  // decreasing exponents
  if (terms.empty()) throw DomainError("not an L-space knot polynomial: zero polynomial");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const long long expected = i % 2 == 0 ? 1 : -1;
    if (terms[i].second != expected) {
      throw DomainError("not an L-space knot polynomial: coefficients must be +1, -1, ..., +1 alternating (" +
                        delta.to_string() + ")");
    }
  }
  if (terms.size() % 2 == 0) throw DomainError("not an L-space knot polynomial: must end with +1");
  if (!delta.is_symmetric()) throw DomainError("not an L-space knot polynomial: not symmetric");

  const int n = static_cast<int>(terms.size()) - 1;
  std::vector<int> a;
  for (const auto& t : terms) a.push_back(t.first);
  std::vector<int> gr_u(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i <= n; i += 2) {
    const int b_i = a[static_cast<std::size_t>(i - 1)] - a[static_cast<std::size_t>(i)];
    gr_u[static_cast<std::size_t>(i)] = gr_u[static_cast<std::size_t>(i - 1)] - 2 * b_i + 1;
    gr_u[static_cast<std::size_t>(i + 1)] = gr_u[static_cast<std::size_t>(i)] - 1;
  }
  std::vector<Generator> gens;
  for (int i = 0; i <= n; ++i) {
    const int u = gr_u[static_cast<std::size_t>(i)];
    gens.push_back({"x" + std::to_string(i), {u, u - 2 * a[static_cast<std::size_t>(i)]}});
  }
  if (gens.back().grading.gr_v != 0) throw InternalError("staircase: gr_v anchor at the last generator is off");
  BigradedComplex c(std::move(gens));
  for (int i = 1; i <= n; i += 2) {
    const std::size_t k = static_cast<std::size_t>(i);
    c.add_term(i, i - 1, PolyUV::u_power(a[k - 1] - a[k]));
    c.add_term(i, i + 1, PolyUV::v_power(a[k] - a[k + 1]));
  }
  return c;
}

BigradedComplex box_complex(int s0, int shift) {
  auto at = [shift](int a) {
    const int m = a + shift;
    return Bigrading{m, m - 2 * a};
  };
  const std::string tag = "@" + std::to_string(s0);
  BigradedComplex c({{"e1" + tag, at(s0)}, {"e2" + tag, at(s0 + 1)}, {"e3" + tag, at(s0 - 1)}, {"e4" + tag, at(s0)}});
  c.add_term(0, 1, PolyUV::u_power(1));
  c.add_term(0, 2, PolyUV::v_power(1));
  c.add_term(1, 3, PolyUV::v_power(1));
  c.add_term(2, 3, PolyUV::u_power(1));
  return c;
}

namespace {

BigradedComplex direct_sum(const BigradedComplex& a, const BigradedComplex& b) {
  std::vector<Generator> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  BigradedComplex out(std::move(gens));
  for (int x = 0; x < a.size(); ++x) {
    for (const auto& [y, v] : a.differential.column(x)) out.add_term(x, y, v);
  }
  for (int x = 0; x < b.size(); ++x) {
    for (const auto& [y, v] : b.differential.column(x)) out.add_term(a.size() + x, a.size() + y, v);
  }
  return out;
}

}  // namespace

BigradedComplex thin_from_alexander_signature(const LaurentPoly& delta, int sigma) {
  if (sigma % 2 != 0) throw DomainError("signature must be even");
  if (!delta.is_symmetric() || delta.at_one() != 1) {
    throw DomainError("Alexander polynomial must be symmetric with value 1 at t = 1");
  }
  const int half = sigma / 2;
  std::map<int, long long> dims;
  for (const auto& [s, a] : delta.coefficients()) {
    const long long sign = ((s + half) % 2 == 0) ? 1 : -1;
    if ((a > 0 ? 1 : -1) != sign) {
      throw DomainError("coefficient of t^" + std::to_string(s) + " has the wrong sign for signature " +
                        std::to_string(sigma));
    }
    dims[s] = std::llabs(a);
  }

  const int tau = -half;
  const int t = std::abs(tau);
  std::vector<std::pair<int, long long>> stair_terms;
  for (int i = 0; i <= 2 * t; ++i) stair_terms.emplace_back(t - i, i % 2 == 0 ? 1 : -1);
  BigradedComplex stair = staircase_from_alexander(LaurentPoly(stair_terms));
  if (tau < 0) stair = dualize(stair);
  for (int s = -t; s <= t; ++s) {
    if (--dims[s] < 0) {
      throw DomainError("dimensions implied by the Alexander polynomial cannot hold the staircase for this signature");
    }
  }

  BigradedComplex out = stair;
  const int top = delta.max_degree();
  for (int s = std::max(top, t); s >= -std::max(top, t); --s) {
    const long long r = dims[s];
    if (r < 0) throw DomainError("Alexander polynomial and signature are inconsistent with a thin complex");
    if (r == 0) continue;
    // r boxes centred at s - 1 use r at s, 2r at s - 1 and r at s - 2
    dims[s] = 0;
    dims[s - 1] -= 2 * r;
    dims[s - 2] -= r;
    for (long long k = 0; k < r; ++k) out = direct_sum(out, box_complex(s - 1, half));
  }
  for (const auto& [s, r] : dims) {
    if (r != 0) throw DomainError("Alexander polynomial and signature are inconsistent with a thin complex");
  }
  // distinct labels for repeated boxes
  std::map<std::string, int> seen;
  for (auto& g : out.generators) {
    const int k = seen[g.label]++;
    if (k > 0) g.label += "#" + std::to_string(k);
  }
  return out;
}

BigradedComplex build(const KnotSpec& spec) {
  switch (spec.kind) {
    case KnotSpec::Kind::lspace:
      return staircase_from_alexander(spec.alexander);
    case KnotSpec::Kind::alternating:
      return thin_from_alexander_signature(spec.alexander, spec.signature);
    case KnotSpec::Kind::sum: {
      if (spec.children.empty()) return unknot_complex();
      BigradedComplex out = build(spec.children.front());
      for (std::size_t i = 1; i < spec.children.size(); ++i) out = tensor_product(out, build(spec.children[i]));
      return out;
    }
    case KnotSpec::Kind::mirror:
      if (spec.children.size() != 1) throw SchemaError("mirror needs exactly one operand");
      return dualize(build(spec.children.front()));
    case KnotSpec::Kind::reverse:
      if (spec.children.size() != 1) throw SchemaError("reverse needs exactly one operand");
      return build(spec.children.front());
    case KnotSpec::Kind::one_one:
      if (!spec.diagram) throw SchemaError("one_one spec has no diagram");
      return cfk_from_diagram(*spec.diagram);
  }
  throw InternalError("unknown knot spec kind");
}

std::optional<LaurentPoly> expected_alexander(const KnotSpec& spec) {
  switch (spec.kind) {
    case KnotSpec::Kind::lspace:
    case KnotSpec::Kind::alternating:
      return spec.alexander;
    case KnotSpec::Kind::sum: {
      LaurentPoly out = LaurentPoly::one();
      for (const auto& child : spec.children) {
        auto d = expected_alexander(child);
        if (!d) return std::nullopt;
        out = out * *d;
      }
      return out;
    }
    case KnotSpec::Kind::mirror: {
      if (spec.children.size() != 1) return std::nullopt;
      auto d = expected_alexander(spec.children.front());
      if (!d) return std::nullopt;
      return d->inverted();
    }
    case KnotSpec::Kind::reverse:
      if (spec.children.size() != 1) return std::nullopt;
      return expected_alexander(spec.children.front());
    case KnotSpec::Kind::one_one:
      return std::nullopt;
  }
  return std::nullopt;
}

GradedVectorSpace hfk_hat(const BigradedComplex& c) {
  const auto h = homology_f2(set_uv_zero(c));
  GradedVectorSpace out;
  for (const auto& [g, d] : h.dims) {
    const Bigrading b{g.first, g.second};
    out.dims[{b.gr_u, b.alexander()}] += d;
  }
  return out;
}

DvrModule hfk_minus(const BigradedComplex& c) {
  auto result = homology_dvr(specialize_one_var(c, SpecializeMode::V0));
  if (result.module.free_rank() != 1) {
    throw DomainError("HFK^- has " + std::to_string(result.module.free_rank()) +
                      " free summands; the complex is not a knot complex");
  }
  return result.module;
}

int genus(const BigradedComplex& c) {
  int top = 0;
  for (const auto& [key, d] : hfk_hat(c).dims) top = std::max(top, key.second);
  return top;
}

bool is_fibered(const BigradedComplex& c) {
  const auto h = hfk_hat(c);
  const int g = genus(c);
  int dim = 0;
  for (const auto& [key, d] : h.dims) {
    if (key.second == g) dim += d;
  }
  return dim == 1;
}

LaurentPoly euler_characteristic(const BigradedComplex& c) {
  std::vector<std::pair<int, long long>> terms;
  for (const auto& [key, d] : hfk_hat(c).dims) {
    terms.emplace_back(key.second, (key.first % 2 == 0 ? 1 : -1) * static_cast<long long>(d));
  }
  return LaurentPoly(terms);
}

}  // namespace floer
