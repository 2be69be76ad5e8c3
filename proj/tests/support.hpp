#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "floer/complex.hpp"
#include "floer/h1.hpp"
#include "floer/knots.hpp"
#include "floer/module.hpp"
#include "floer/wcomplex.hpp"

namespace testing {

using namespace floer;

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Rank over F2 of a dense 0/1 matrix.
inline int f2_rank(std::vector<std::vector<char>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return r[c] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) != rank && rows[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[static_cast<std::size_t>(rank)][k];
      }
    }
    ++rank;
  }
  return rank;
}

/// Homology of C / W^N as a graded F2-vector space, by dense linear algebra
/// on the basis {W^j x : j < N}.
inline std::map<int, int> dense_truncated_homology(const OneVarComplex& c, int N) {
  std::map<int, std::vector<std::pair<int, int>>> basis;  // grading -> (generator, power)
  for (int i = 0; i < c.size(); ++i) {
    for (int j = 0; j < N; ++j) basis[c.gradings[static_cast<std::size_t>(i)] - 2 * j].push_back({i, j});
  }
  auto boundary_matrix = [&](int g) {
    // rows: basis of grading g - 1, columns: basis of grading g
    std::vector<std::vector<char>> m;
    auto src = basis.find(g);
    auto dst = basis.find(g - 1);
    if (src == basis.end() || dst == basis.end()) return m;
    std::map<std::pair<int, int>, std::size_t> row_of;
    for (std::size_t r = 0; r < dst->second.size(); ++r) row_of[dst->second[r]] = r;
    m.assign(dst->second.size(), std::vector<char>(src->second.size(), 0));
    for (std::size_t col = 0; col < src->second.size(); ++col) {
      const auto [x, j] = src->second[col];
      for (const auto& [y, coeff] : c.differential.column(x)) {
        for (int k = 0; k <= coeff.degree(); ++k) {
          if (coeff.coeff(k) && j + k < N) m[row_of.at({y, j + k})][col] ^= 1;
        }
      }
    }
    return m;
  };
  std::map<int, int> out;
  for (const auto& [g, gens] : basis) {
    const int dim = static_cast<int>(gens.size());
    const int rank_out = f2_rank(boundary_matrix(g));
    const int rank_in = f2_rank(boundary_matrix(g + 1));
    const int h = dim - rank_out - rank_in;
    if (h != 0) out[g] = h;
  }
  return out;
}

/// What a module predicts for the homology of C / W^N.
inline std::map<int, int> predicted_truncated_homology(const DvrModule& m, int N) {
  std::map<int, int> out;
  for (int d : m.free_gradings()) {
    for (int j = 0; j < N; ++j) ++out[d - 2 * j];
  }
  for (const auto& t : m.torsion()) {
    for (int j = 0; j < t.exponent; ++j) ++out[t.grading - 2 * j];
    for (int j = N - t.exponent; j < N; ++j) ++out[t.grading - 2 * t.exponent + 1 - 2 * j];
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// e_i -> e_i + c e_j applied to a differential (target x source).
template <class R>
SparseMatrix<R> change_basis(const SparseMatrix<R>& d, int i, int j, const R& c) {
  SparseMatrix<R> e(d.rows(), d.cols());
  for (int k = 0; k < d.cols(); ++k) e.add(k, k, R::one());
  e.add(j, i, c);
  return e * d * e;
}

struct KnownComplex {
  OneVarComplex complex;
  DvrModule module;
};

/// Direct sum of free, torsion and acyclic pieces, hidden by random
/// homogeneous changes of basis.
inline KnownComplex random_known_complex(std::mt19937& rng, int max_generators = 20) {
  std::vector<int> free;
  std::vector<TorsionSummand> torsion;
  std::vector<int> gradings;
  std::vector<std::tuple<int, int, int>> arrows;  // source, target, W-power
  while (static_cast<int>(gradings.size()) + 2 <= max_generators) {
    const int kind = uniform(rng, 0, 3);
    const int g = uniform(rng, -6, 6);
    const int idx = static_cast<int>(gradings.size());
    if (kind == 0) {
      free.push_back(g);
      gradings.push_back(g);
    } else if (kind == 1) {
      const int n = uniform(rng, 1, 4);
      torsion.push_back({g, n});
      gradings.push_back(g);
      gradings.push_back(g - 2 * n + 1);
      arrows.emplace_back(idx + 1, idx, n);
    } else {
      gradings.push_back(g);
      gradings.push_back(g + 1);
      arrows.emplace_back(idx + 1, idx, 0);
    }
    if (uniform(rng, 0, 5) == 0) break;
  }
  const int n = static_cast<int>(gradings.size());
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  OneVarComplex c(labels, gradings);
  for (const auto& [s, t, k] : arrows) c.add_term(s, t, WPoly::monomial(k));
  for (int step = 0; step < 4 * n; ++step) {
    const int i = uniform(rng, 0, n - 1);
    const int j = uniform(rng, 0, n - 1);
    const int diff = gradings[static_cast<std::size_t>(j)] - gradings[static_cast<std::size_t>(i)];
    if (i == j || diff < 0 || diff % 2 != 0) continue;
    c.differential = change_basis(c.differential, i, j, WPoly::monomial(diff / 2));
  }
  return {c, DvrModule(free, torsion)};
}

/// Random homogeneous changes of basis e_i -> e_i + U^a V^b e_j.
inline BigradedComplex scramble(BigradedComplex c, std::mt19937& rng, int steps) {
  const int n = c.size();
  for (int step = 0; step < steps && n > 1; ++step) {
    const int i = uniform(rng, 0, n - 1);
    const int j = uniform(rng, 0, n - 1);
    const int du = c.grading(j).gr_u - c.grading(i).gr_u;
    const int dv = c.grading(j).gr_v - c.grading(i).gr_v;
    if (i == j || du < 0 || dv < 0 || du % 2 != 0 || dv % 2 != 0) continue;
    c.differential = change_basis(c.differential, i, j, PolyUV(Monomial{du / 2, dv / 2}));
  }
  return c;
}

/// Adds x -> y with a unit coefficient next to the existing generators.
inline BigradedComplex with_acyclic_pair(const BigradedComplex& c, Bigrading at) {
  auto gens = c.generators;
  gens.push_back({"p_x", {at.gr_u + 1, at.gr_v + 1}});
  gens.push_back({"p_y", at});
  BigradedComplex out(gens);
  for (int x = 0; x < c.size(); ++x) {
    for (const auto& [y, v] : c.differential.column(x)) out.add_term(x, y, v);
  }
  out.add_term(c.size(), c.size() + 1, PolyUV::one());
  return out;
}

/// Symmetric staircase polynomial from step lengths b_1..b_k mirrored.
inline LaurentPoly staircase_polynomial(const std::vector<int>& half_steps) {
  std::vector<int> steps = half_steps;
  steps.insert(steps.end(), half_steps.rbegin(), half_steps.rend());
  int top = 0;
  for (int b : half_steps) top += b;
  std::vector<std::pair<int, long long>> terms{{top, 1}};
  int e = top;
  long long sign = 1;
  for (int b : steps) {
    e -= b;
    sign = -sign;
    terms.emplace_back(e, sign);
  }
  return LaurentPoly(terms);
}

inline LaurentPoly random_lspace_polynomial(std::mt19937& rng) {
  std::vector<int> half(static_cast<std::size_t>(uniform(rng, 0, 4)));
  for (int& b : half) b = uniform(rng, 1, 3);
  return staircase_polynomial(half);
}

/// Polynomial of a thin knot with tau = t: staircase of T(2, 2|t|+1) plus boxes.
inline std::pair<LaurentPoly, int> random_thin_pair(std::mt19937& rng) {
  const int tau = uniform(rng, -3, 3);
  const int sigma = -2 * tau;
  const int k = std::abs(tau);
  std::vector<std::pair<int, long long>> terms;
  for (int i = 0; i <= 2 * k; ++i) terms.emplace_back(k - i, i % 2 == 0 ? 1 : -1);
  LaurentPoly delta(terms);
  if (tau < 0) delta = delta.inverted();
  const int boxes = uniform(rng, 0, 3);
  for (int b = 0; b < boxes; ++b) {
    const int s = uniform(rng, 0, 2);
    for (int s0 : s == 0 ? std::vector<int>{0} : std::vector<int>{s, -s}) {
      const long long sign = ((s0 + sigma / 2) % 2 == 0) ? 1 : -1;
      delta += LaurentPoly({{s0, 2 * sign}, {s0 + 1, -sign}, {s0 - 1, -sign}});
    }
  }
  return {delta, sigma};
}

inline IntMatrix random_matrix(std::mt19937& rng, int size, int bound) {
  IntMatrix m(static_cast<std::size_t>(size), std::vector<long long>(static_cast<std::size_t>(size)));
  for (auto& row : m) {
    for (auto& v : row) v = uniform(rng, -bound, bound);
  }
  return m;
}

inline LaurentPoly torus_polynomial(int p, int q) {
  // (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), symmetrized
  std::vector<long long> num(static_cast<std::size_t>(p * q + 2), 0);
  num[static_cast<std::size_t>(p * q + 1)] += 1;
  num[static_cast<std::size_t>(p * q)] -= 1;
  num[1] -= 1;
  num[0] += 1;
  auto divide = [](std::vector<long long> a, int k) {  // by t^k - 1
    std::vector<long long> out(a.size(), 0);
    for (int i = static_cast<int>(a.size()) - 1; i >= k; --i) {
      const long long c = a[static_cast<std::size_t>(i)];
      out[static_cast<std::size_t>(i - k)] = c;
      a[static_cast<std::size_t>(i)] -= c;
      a[static_cast<std::size_t>(i - k)] += c;
    }
    return out;
  };
  auto d = divide(divide(num, p), q);
  const int deg = (p - 1) * (q - 1);
  std::vector<std::pair<int, long long>> terms;
  for (int i = 0; i <= deg; ++i) {
    if (d[static_cast<std::size_t>(i)] != 0) terms.emplace_back(i - deg / 2, d[static_cast<std::size_t>(i)]);
  }
  return LaurentPoly(terms);
}

}  // namespace testing
