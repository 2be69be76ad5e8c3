#include "floer/complex.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "floer/errors.hpp"

namespace floer {

BigradedComplex::BigradedComplex(std::vector<Generator> gens)
    : generators(std::move(gens)),
      differential(static_cast<int>(generators.size()), static_cast<int>(generators.size())) {}

std::optional<int> BigradedComplex::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (label(i) == name) return i;
  }
  return std::nullopt;
}

void BigradedComplex::add_term(int source, int target, const PolyUV& coeff) {
  differential.add(target, source, coeff);
}

void BigradedComplex::add_term(const std::string& source, const std::string& target, const PolyUV& coeff) {
  auto s = index_of(source);
  auto t = index_of(target);
  if (!s || !t) throw std::invalid_argument("BigradedComplex::add_term: unknown label");
  add_term(*s, *t, coeff);
}

std::string BigradedComplex::boundary_string(int i) const {
  std::string out;
  for (const auto& [row, coeff] : differential.column(i)) {
    for (const auto& m : coeff.terms()) {
      if (!out.empty()) out += " + ";
      out += m.is_one() ? label(row) : m.to_string() + label(row);
    }
  }
  return out.empty() ? "0" : out;
}

int BigradedComplex::min_alexander() const {
  int lo = std::numeric_limits<int>::max();
  for (int i = 0; i < size(); ++i) lo = std::min(lo, alexander(i));
  return size() == 0 ? 0 : lo;
}

int BigradedComplex::max_alexander() const {
  int hi = std::numeric_limits<int>::min();
  for (int i = 0; i < size(); ++i) hi = std::max(hi, alexander(i));
  return size() == 0 ? 0 : hi;
}

ComplexValidation validate_complex(const BigradedComplex& c) {
  ComplexValidation report;
  for (int i = 0; i < c.size(); ++i) {
    if (!c.grading(i).parity_ok()) {
      report.parity = false;
      report.problems.push_back("generator " + c.label(i) + " has gr_u and gr_v of different parity");
    }
  }
  for (int x = 0; x < c.size(); ++x) {
    const auto& gx = c.grading(x);
    for (const auto& [y, coeff] : c.differential.column(x)) {
      const auto& gy = c.grading(y);
      for (const auto& m : coeff.terms()) {
        if (gy.gr_u - 2 * m.u_exp != gx.gr_u - 1 || gy.gr_v - 2 * m.v_exp != gx.gr_v - 1) {
          report.homogeneous = false;
          report.problems.push_back("term " + m.to_string() + "*" + c.label(y) + " in d(" + c.label(x) +
                                    ") does not have bidegree (-1,-1)");
        }
      }
    }
  }
  const auto d2 = c.differential * c.differential;
  if (!d2.is_zero()) {
    report.square_zero = false;
    for (int x = 0; x < c.size(); ++x) {
      for (const auto& [y, coeff] : d2.column(x)) {
        report.problems.push_back("d^2(" + c.label(x) + ") has coefficient " + coeff.to_string() + " on " +
                                  c.label(y));
      }
    }
  }
  return report;
}

BigradedComplex unknot_complex(Bigrading shift) {
  return BigradedComplex({Generator{"x", shift}});
}

BigradedComplex tensor_product(const BigradedComplex& c1, const BigradedComplex& c2) {
  const int n1 = c1.size();
  const int n2 = c2.size();
  std::vector<Generator> gens;
  gens.reserve(static_cast<std::size_t>(n1 * n2));
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      gens.push_back({c1.label(i) + "|" + c2.label(j), c1.grading(i) + c2.grading(j)});
    }
  }
  BigradedComplex out(std::move(gens));
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      const int src = i * n2 + j;
      for (const auto& [k, coeff] : c1.differential.column(i)) out.add_term(src, k * n2 + j, coeff);
      for (const auto& [k, coeff] : c2.differential.column(j)) out.add_term(src, i * n2 + k, coeff);
    }
  }
  return out;
}

BigradedComplex dualize(const BigradedComplex& c) {
  std::vector<Generator> gens;
  gens.reserve(c.generators.size());
  for (const auto& g : c.generators) {
    std::string label = g.label;
    if (!label.empty() && label.back() == '*') {
      label.pop_back();
    } else {
      label += '*';
    }
    gens.push_back({label, -g.grading});
  }
  BigradedComplex out(std::move(gens));
  out.differential = c.differential.transpose();
  return out;
}

BigradedComplex swap_uv(const BigradedComplex& c) {
  std::vector<Generator> gens;
  for (const auto& g : c.generators) gens.push_back({g.label, {g.grading.gr_v, g.grading.gr_u}});
  BigradedComplex out(std::move(gens));
  out.differential = c.differential.map_entries([](const PolyUV& p) { return p.swapped(); });
  return out;
}

bool same_structure(const BigradedComplex& c1, const BigradedComplex& c2) {
  if (c1.size() != c2.size()) return false;
  for (int i = 0; i < c1.size(); ++i) {
    if (c1.grading(i) != c2.grading(i)) return false;
  }
  return c1.differential == c2.differential;
}

std::optional<std::vector<int>> find_isomorphism(const BigradedComplex& c1, const BigradedComplex& c2) {
  const int n = c1.size();
  if (n != c2.size()) return std::nullopt;
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  // entries between already-assigned generators must agree
  auto consistent = [&](int i) {
    const int pi = perm[static_cast<std::size_t>(i)];
    for (int k = 0; k <= i; ++k) {
      const int pk = perm[static_cast<std::size_t>(k)];
      if (c1.differential.at(k, i) != c2.differential.at(pk, pi)) return false;
      if (c1.differential.at(i, k) != c2.differential.at(pi, pk)) return false;
    }
    return true;
  };

  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)] || c1.grading(i) != c2.grading(j)) continue;
      perm[static_cast<std::size_t>(i)] = j;
      used[static_cast<std::size_t>(j)] = true;
      if (consistent(i) && place(i + 1)) return true;
      used[static_cast<std::size_t>(j)] = false;
    }
    perm[static_cast<std::size_t>(i)] = -1;
    return false;
  };

  if (!place(0)) return std::nullopt;
  return perm;
}

}  // namespace floer
