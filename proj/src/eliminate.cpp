#include "floer/eliminate.hpp"

#include <limits>
#include <map>
#include <set>
#include <tuple>

namespace floer {

namespace {

struct UVOps {
  bool is_unit(const PolyUV& p) const { return p.is_one(); }
  PolyUV inverse(const PolyUV&) const { return PolyUV::one(); }
  PolyUV normalize(PolyUV p) const { return p; }
  PolyUV one() const { return PolyUV::one(); }
};

struct WOps {
  int truncation = 0;
  bool is_unit(const WPoly& p) const { return truncation > 0 ? p.coeff(0) : p.is_one(); }
  WPoly inverse(const WPoly& p) const { return truncation > 0 ? p.inverse_mod(truncation) : p; }
  WPoly normalize(const WPoly& p) const { return p.truncated(truncation); }
  WPoly one() const { return WPoly::one(); }
};

template <class R>
void accumulate(std::map<int, R>& m, int key, const R& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = m.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) m.erase(it);
  }
}

template <class R>
struct Engine {
  std::vector<int> kept;
  SparseMatrix<R> differential;
  SparseMatrix<R> projection;
  SparseMatrix<R> inclusion;
  SparseMatrix<R> homotopy;
};

template <class R, class Ops>
Engine<R> cancel_units(const SparseMatrix<R>& d, const Ops& ops, PivotOrder order) {
  const int n = d.cols();
  std::vector<std::map<int, R>> cols(static_cast<std::size_t>(n));
  std::vector<std::set<int>> rows(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    for (const auto& [r, v] : d.column(c)) {
      R w = ops.normalize(v);
      if (w.is_zero()) continue;
      cols[static_cast<std::size_t>(c)][r] = w;
      rows[static_cast<std::size_t>(r)].insert(c);
    }
  }
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  std::vector<std::map<int, R>> incl(static_cast<std::size_t>(n));  // current -> original
  std::vector<std::map<int, R>> proj(static_cast<std::size_t>(n));  // original -> current
  std::vector<std::map<int, R>> htpy(static_cast<std::size_t>(n));  // original -> original
  for (int i = 0; i < n; ++i) {
    incl[static_cast<std::size_t>(i)][i] = ops.one();
    proj[static_cast<std::size_t>(i)][i] = ops.one();
  }

  auto set_entry = [&](int r, int c, const R& v) {
    auto& col = cols[static_cast<std::size_t>(c)];
    if (v.is_zero()) {
      col.erase(r);
      rows[static_cast<std::size_t>(r)].erase(c);
    } else {
      col[r] = v;
      rows[static_cast<std::size_t>(r)].insert(c);
    }
  };

  while (true) {
    int px = -1;
    int py = -1;
    long best = std::numeric_limits<long>::max();
    for (int x = 0; x < n; ++x) {
      if (!alive[static_cast<std::size_t>(x)]) continue;
      for (const auto& [y, v] : cols[static_cast<std::size_t>(x)]) {
        if (y == x || !ops.is_unit(v)) continue;
        if (order == PivotOrder::fewest_fill) {
          const long cost = static_cast<long>(cols[static_cast<std::size_t>(x)].size() - 1) *
                            static_cast<long>(rows[static_cast<std::size_t>(y)].size() - 1);
          if (cost < best) {
            best = cost;
            px = x;
            py = y;
          }
        } else if (x > px || (x == px && y > py)) {
          px = x;
          py = y;
        }
      }
    }
    if (px < 0) break;

    const R inv = ops.inverse(cols[static_cast<std::size_t>(px)].at(py));
    std::vector<std::pair<int, R>> row_coeffs;  // c_a: coefficient of y in d(a), a != x
    for (int a : rows[static_cast<std::size_t>(py)]) {
      if (a != px) row_coeffs.emplace_back(a, cols[static_cast<std::size_t>(a)].at(py));
    }
    std::vector<std::pair<int, R>> col_coeffs;  // d_z: coefficient of z in d(x), z != y
    for (const auto& [z, v] : cols[static_cast<std::size_t>(px)]) {
      if (z != py) col_coeffs.emplace_back(z, v);
    }

    // homotopy and projection updates use the maps before this step
    const auto incl_x = incl[static_cast<std::size_t>(px)];
    for (int o = 0; o < n; ++o) {
      auto& p = proj[static_cast<std::size_t>(o)];
      auto it = p.find(py);
      R p_y = it == p.end() ? R{} : it->second;
      p.erase(px);
      p.erase(py);
      if (p_y.is_zero()) continue;
      const R scale = ops.normalize(p_y * inv);
      for (const auto& [orig, v] : incl_x) {
        accumulate(htpy[static_cast<std::size_t>(o)], orig, ops.normalize(scale * v));
      }
      for (const auto& [z, dz] : col_coeffs) accumulate(p, z, ops.normalize(scale * dz));
    }
    for (const auto& [a, ca] : row_coeffs) {
      const R scale = ops.normalize(ca * inv);
      for (const auto& [orig, v] : incl_x) {
        accumulate(incl[static_cast<std::size_t>(a)], orig, ops.normalize(scale * v));
      }
    }

    // d'(a) = d(a) + c_a inv d(x), restricted away from x and y
    for (const auto& [a, ca] : row_coeffs) {
      const R scale = ops.normalize(ca * inv);
      for (const auto& [z, dz] : col_coeffs) {
        auto& col = cols[static_cast<std::size_t>(a)];
        auto it = col.find(z);
        R updated = it == col.end() ? R{} : it->second;
        updated += ops.normalize(scale * dz);
        set_entry(z, a, updated);
      }
    }

    for (int g : {px, py}) {
      for (const auto& [r, v] : cols[static_cast<std::size_t>(g)]) rows[static_cast<std::size_t>(r)].erase(g);
      cols[static_cast<std::size_t>(g)].clear();
      for (int c : std::set<int>(rows[static_cast<std::size_t>(g)])) cols[static_cast<std::size_t>(c)].erase(g);
      rows[static_cast<std::size_t>(g)].clear();
      alive[static_cast<std::size_t>(g)] = false;
    }
  }

  Engine<R> out;
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (alive[static_cast<std::size_t>(i)]) {
      position[static_cast<std::size_t>(i)] = static_cast<int>(out.kept.size());
      out.kept.push_back(i);
    }
  }
  const int k = static_cast<int>(out.kept.size());
  out.differential = SparseMatrix<R>(k, k);
  out.projection = SparseMatrix<R>(k, n);
  out.inclusion = SparseMatrix<R>(n, k);
  out.homotopy = SparseMatrix<R>(n, n);
  for (int j = 0; j < k; ++j) {
    const int x = out.kept[static_cast<std::size_t>(j)];
    for (const auto& [y, v] : cols[static_cast<std::size_t>(x)]) {
      out.differential.add(position[static_cast<std::size_t>(y)], j, v);
    }
    for (const auto& [orig, v] : incl[static_cast<std::size_t>(x)]) out.inclusion.add(orig, j, v);
  }
  for (int o = 0; o < n; ++o) {
    for (const auto& [c, v] : proj[static_cast<std::size_t>(o)]) {
      out.projection.add(position[static_cast<std::size_t>(c)], o, v);
    }
    for (const auto& [orig, v] : htpy[static_cast<std::size_t>(o)]) out.homotopy.add(orig, o, v);
  }
  return out;
}

}  // namespace

BigradedReduction gaussian_eliminate(const BigradedComplex& c, PivotOrder order) {
  auto engine = cancel_units(c.differential, UVOps{}, order);
  std::vector<Generator> gens;
  for (int i : engine.kept) gens.push_back(c.generators[static_cast<std::size_t>(i)]);
  BigradedReduction out;
  out.reduced = BigradedComplex(std::move(gens));
  out.reduced.differential = std::move(engine.differential);
  out.kept = std::move(engine.kept);
  out.projection = std::move(engine.projection);
  out.inclusion = std::move(engine.inclusion);
  out.homotopy = std::move(engine.homotopy);
  return out;
}

OneVarReduction gaussian_eliminate(const OneVarComplex& c, PivotOrder order) {
  auto engine = cancel_units(c.differential, WOps{c.truncation}, order);
  OneVarReduction out;
  std::vector<std::string> labels;
  std::vector<int> gradings;
  for (int i : engine.kept) {
    labels.push_back(c.labels[static_cast<std::size_t>(i)]);
    gradings.push_back(c.gradings[static_cast<std::size_t>(i)]);
  }
  out.reduced = OneVarComplex(std::move(labels), std::move(gradings), c.variable);
  out.reduced.truncation = c.truncation;
  out.reduced.mode = c.mode;
  out.reduced.differential = std::move(engine.differential);
  out.kept = std::move(engine.kept);
  out.projection = std::move(engine.projection);
  out.inclusion = std::move(engine.inclusion);
  out.homotopy = std::move(engine.homotopy);
  return out;
}

}  // namespace floer
