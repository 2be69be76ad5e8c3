#include "floer/surgery.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "floer/errors.hpp"
#include "floer/knots.hpp"
#include "floer/specialize.hpp"

namespace floer {

namespace {

SparseMatrix<WPoly> diagonal_powers(const BigradedComplex& c, int s, bool toward_u) {
  SparseMatrix<WPoly> m(c.size(), c.size());
  for (int i = 0; i < c.size(); ++i) {
    m.set(i, i, WPoly::monomial(toward_u ? iota_u_exponent(c, i, s) : iota_v_exponent(c, i, s)));
  }
  return m;
}

}  // namespace

bool FlipMap::is_chain_map() const {
  return target.differential * matrix == matrix * source.differential;
}

bool FlipMap::is_quasi_isomorphism() const {
  if (source_model.reduced.size() != 1 || target_model.reduced.size() != 1) return false;
  // P_B o phi o I_U must be the identity on the one-generator models
  const auto back = target_model.projection * matrix * source_model.inclusion;
  return back.at(0, 0).is_one();
}

FlipMap flip_map(const BigradedComplex& c, int s, PivotOrder order) {
  FlipMap f;
  f.s = s;
  f.source = u_localized_summand(c, s);
  f.target = b_summand(c, s);
  f.source_model = gaussian_eliminate(f.source, order);
  f.target_model = gaussian_eliminate(f.target, order);
  if (f.source_model.reduced.size() != 1 || f.target_model.reduced.size() != 1) {
    throw DomainError("localized complexes do not reduce to a single tower generator; not a knot complex");
  }
  f.matrix = f.target_model.inclusion * f.source_model.projection;
  return f;
}

int spin_c_class(int s, int n) {
  const int m = std::abs(n);
  if (m == 0) throw DomainError("surgery coefficient 0 is not supported");
  int r = ((s % m) + m) % m;
  if (2 * r > m) r -= m;
  return r;
}

DvrResult large_surgery(const BigradedComplex& c, int n, int s, const DvrOptions& options) {
  const int g = genus(c);
  if (n < 1 || n < 2 * g - 1) {
    throw DomainError("large surgery needs n >= max(1, 2g - 1) = " + std::to_string(std::max(1, 2 * g - 1)) +
                      ", got n = " + std::to_string(n));
  }
  if (2 * std::abs(s) > n) throw DomainError("large surgery needs |s| <= n/2");
  OneVarComplex a = alexander_summand(c, s);
  a.mode = GradingMode::relative;
  return homology_dvr(a, options);
}

SurgeryResult large_surgery_all(const BigradedComplex& c, int n, const DvrOptions& options) {
  SurgeryResult out;
  out.n = n;
  for (int s = -(n - 1) / 2; s <= n / 2; ++s) {
    auto r = large_surgery(c, n, s, options);
    out.classes[spin_c_class(s, n)] = {spin_c_class(s, n), r.module, r.stable, r.truncation};
  }
  return out;
}

ConeSystem build_cone(const BigradedComplex& c, int n, const ConeOptions& options) {
  if (n == 0) throw DomainError("0-surgery has b1 > 0 and is out of scope");
  const int g = genus(c);
  const int m = std::abs(n);
  ConeSystem sys;
  sys.n = n;
  sys.genus = g;
  sys.window = std::max(g - 1, m / 2) + std::max(options.window_slack, 0);
  const int b = sys.window;

  std::map<int, SparseMatrix<WPoly>> flip_edge;  // A_s -> B_{s+n}, canonical bases
  for (int s = -b; s <= b; ++s) {
    const FlipMap phi = flip_map(c, s, options.flip_order);
    flip_edge[s] = phi.matrix * diagonal_powers(c, s, true);
  }

  for (int r = -(m - 1) / 2; r <= m / 2; ++r) {
    ConeClass cls;
    cls.spin_c = r;
    std::vector<std::string> labels;
    std::vector<int> gradings;
    std::vector<OneVarComplex> pieces;
    std::map<std::pair<char, int>, int> column_of;
    auto add_column = [&](char kind, int s) {
      OneVarComplex piece = kind == 'A' ? alexander_summand(c, s) : b_summand(c, s);
      ConeColumn col{kind, s, static_cast<int>(labels.size()), piece.size(), 0};
      for (int i = 0; i < piece.size(); ++i) {
        labels.push_back(std::string(1, kind) + "[" + std::to_string(s) + "]:" + piece.labels[static_cast<std::size_t>(i)]);
        gradings.push_back(piece.gradings[static_cast<std::size_t>(i)]);
      }
      column_of[{kind, s}] = static_cast<int>(cls.columns.size());
      cls.columns.push_back(col);
      pieces.push_back(std::move(piece));
    };
    for (int s = -b; s <= b; ++s) {
      if (spin_c_class(s, n) == r) add_column('A', s);
    }
    for (int s = n - b; s <= b; ++s) {
      if (spin_c_class(s, n) == r) add_column('B', s);
    }

    struct Block {
      int from;
      int to;
      SparseMatrix<WPoly> matrix;  // to x from
    };
    std::vector<Block> blocks;
    for (const auto& col : cls.columns) {
      if (col.kind != 'A') continue;
      const int from = column_of.at({'A', col.s});
      if (auto it = column_of.find({'B', col.s}); it != column_of.end()) {
        blocks.push_back({from, it->second, diagonal_powers(c, col.s, false)});
        cls.edges.push_back({from, it->second, false});
      }
      if (auto it = column_of.find({'B', col.s + n}); it != column_of.end()) {
        blocks.push_back({from, it->second, flip_edge.at(col.s)});
        cls.edges.push_back({from, it->second, true});
      }
    }

    // column offsets from the edge degrees
    std::vector<std::optional<int>> offset(cls.columns.size());
    std::vector<std::vector<std::pair<int, int>>> adjacency(cls.columns.size());  // (neighbour, offset delta)
    for (const auto& blk : blocks) {
      const auto& src = pieces[static_cast<std::size_t>(blk.from)];
      const auto& dst = pieces[static_cast<std::size_t>(blk.to)];
      for (int x = 0; x < blk.matrix.cols(); ++x) {
        for (const auto& [y, v] : blk.matrix.column(x)) {
          if (!v.is_monomial()) throw InternalError("cone edge entry is not homogeneous");
          const int delta = src.gradings[static_cast<std::size_t>(x)] - 1 + 2 * v.valuation() -
                            dst.gradings[static_cast<std::size_t>(y)];
          adjacency[static_cast<std::size_t>(blk.from)].push_back({blk.to, delta});
          adjacency[static_cast<std::size_t>(blk.to)].push_back({blk.from, -delta});
        }
      }
    }
    for (std::size_t start = 0; start < cls.columns.size(); ++start) {
      if (offset[start]) continue;
      offset[start] = 0;
      std::deque<std::size_t> queue{start};
      while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (const auto& [v, delta] : adjacency[u]) {
          const int want = *offset[u] + delta;
          auto& slot = offset[static_cast<std::size_t>(v)];
          if (!slot) {
            slot = want;
            queue.push_back(static_cast<std::size_t>(v));
          } else if (*slot != want) {
            throw InternalError("mapping cone gradings are inconsistent in class " + std::to_string(r));
          }
        }
      }
    }
    for (std::size_t k = 0; k < cls.columns.size(); ++k) {
      auto& col = cls.columns[k];
      col.offset = *offset[k];
      for (int i = 0; i < col.size; ++i) gradings[static_cast<std::size_t>(col.first + i)] += col.offset;
    }

    cls.complex = OneVarComplex(std::move(labels), std::move(gradings), 'W');
    cls.complex.mode = GradingMode::relative;
    for (std::size_t k = 0; k < cls.columns.size(); ++k) {
      const auto& col = cls.columns[k];
      const auto& piece = pieces[k];
      for (int x = 0; x < piece.size(); ++x) {
        for (const auto& [y, v] : piece.differential.column(x)) cls.complex.add_term(col.first + x, col.first + y, v);
      }
    }
    for (const auto& blk : blocks) {
      const auto& from = cls.columns[static_cast<std::size_t>(blk.from)];
      const auto& to = cls.columns[static_cast<std::size_t>(blk.to)];
      for (int x = 0; x < blk.matrix.cols(); ++x) {
        for (const auto& [y, v] : blk.matrix.column(x)) cls.complex.add_term(from.first + x, to.first + y, v);
      }
    }
    const auto check = validate_one_var(cls.complex);
    if (!check.ok()) throw InternalError("mapping cone in class " + std::to_string(r) + " is not a valid complex");
    sys.classes.push_back(std::move(cls));
  }
  return sys;
}

SurgeryResult surgery_homology(const BigradedComplex& c, int n, const SurgeryOptions& options) {
  const ConeSystem sys = build_cone(c, n, options.cone);
  SurgeryResult out;
  out.n = n;
  for (const auto& cls : sys.classes) {
    auto r = homology_dvr(cls.complex, options.dvr);
    if (r.module.free_rank() != 1) {
      throw InternalError("class " + std::to_string(cls.spin_c) + " has " + std::to_string(r.module.free_rank()) +
                          " free summands");
    }
    out.classes[cls.spin_c] = {cls.spin_c, r.module, r.stable, r.truncation};
  }
  return out;
}

bool is_lspace_result(const SurgeryResult& r) {
  return std::all_of(r.classes.begin(), r.classes.end(),
                     [](const auto& kv) { return kv.second.module.torsion().empty(); });
}

}  // namespace floer
