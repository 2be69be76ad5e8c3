#include "floer/module.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>
#include <set>
#include <sstream>

#include "floer/eliminate.hpp"
#include "floer/errors.hpp"

namespace floer {

namespace {

using BitRow = boost::dynamic_bitset<>;

int f2_rank(std::vector<BitRow> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().size();
  for (std::size_t col = 0; col < width && rank < static_cast<int>(rows.size()); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const BitRow& r) { return r.test(col); });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) != rank && rows[r].test(col)) rows[r] ^= rows[static_cast<std::size_t>(rank)];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int GradedVectorSpace::total() const {
  int n = 0;
  for (const auto& [g, d] : dims) n += d;
  return n;
}

int GradedVectorSpace::at(int first, int second) const {
  auto it = dims.find({first, second});
  return it == dims.end() ? 0 : it->second;
}

GradedVectorSpace homology_f2(const BigradedComplex& c) {
  std::map<Bigrading, std::vector<int>> by_grading;
  std::vector<int> slot(static_cast<std::size_t>(c.size()));
  for (int i = 0; i < c.size(); ++i) {
    auto& bucket = by_grading[c.grading(i)];
    slot[static_cast<std::size_t>(i)] = static_cast<int>(bucket.size());
    bucket.push_back(i);
  }
  for (int x = 0; x < c.size(); ++x) {
    for (const auto& [y, coeff] : c.differential.column(x)) {
      if (!coeff.is_one()) throw DomainError("homology_f2: differential entry " + coeff.to_string() + " is not constant");
    }
  }
  // rank of the differential leaving each bigrading
  std::map<Bigrading, int> out_rank;
  for (const auto& [g, sources] : by_grading) {
    auto target = by_grading.find(Bigrading{g.gr_u - 1, g.gr_v - 1});
    if (target == by_grading.end()) continue;
    std::vector<BitRow> rows;
    for (int x : sources) {
      BitRow row(target->second.size());
      for (const auto& [y, coeff] : c.differential.column(x)) row.set(static_cast<std::size_t>(slot[static_cast<std::size_t>(y)]));
      rows.push_back(std::move(row));
    }
    out_rank[g] = f2_rank(std::move(rows));
  }
  GradedVectorSpace out;
  for (const auto& [g, sources] : by_grading) {
    const int in = out_rank.count({g.gr_u + 1, g.gr_v + 1}) ? out_rank.at({g.gr_u + 1, g.gr_v + 1}) : 0;
    const int outgoing = out_rank.count(g) ? out_rank.at(g) : 0;
    const int dim = static_cast<int>(sources.size()) - in - outgoing;
    if (dim > 0) out.dims[{g.gr_u, g.gr_v}] = dim;
  }
  return out;
}

GradedVectorSpace homology_uv_window(const BigradedComplex& c, int u_min, int u_max, int v_min, int v_max) {
  struct Cell {
    int gen;
    int i;
    int j;
    auto operator<=>(const Cell&) const = default;
  };
  auto basis = [&](int p, int q) {
    std::map<Cell, int> index;
    for (int x = 0; x < c.size(); ++x) {
      const int du = c.grading(x).gr_u - p;
      const int dv = c.grading(x).gr_v - q;
      if (du < 0 || dv < 0 || du % 2 != 0 || dv % 2 != 0) continue;
      index.emplace(Cell{x, du / 2, dv / 2}, static_cast<int>(index.size()));
    }
    return index;
  };
  auto rank_from = [&](int p, int q) {
    const auto src = basis(p, q);
    const auto dst = basis(p - 1, q - 1);
    if (src.empty() || dst.empty()) return 0;
    std::vector<BitRow> rows;
    for (const auto& [cell, idx] : src) {
      BitRow row(dst.size());
      for (const auto& [y, coeff] : c.differential.column(cell.gen)) {
        for (const auto& m : coeff.terms()) {
          auto it = dst.find(Cell{y, cell.i + m.u_exp, cell.j + m.v_exp});
          if (it != dst.end()) row.flip(static_cast<std::size_t>(it->second));
        }
      }
      rows.push_back(std::move(row));
    }
    return f2_rank(std::move(rows));
  };
  GradedVectorSpace out;
  for (int p = u_min; p <= u_max; ++p) {
    for (int q = v_min; q <= v_max; ++q) {
      const int n = static_cast<int>(basis(p, q).size());
      if (n == 0) continue;
      const int dim = n - rank_from(p, q) - rank_from(p + 1, q + 1);
      if (dim > 0) out.dims[{p, q}] = dim;
    }
  }
  return out;
}

DvrModule::DvrModule(std::vector<int> free_gradings, std::vector<TorsionSummand> torsion, GradingMode mode)
    : free_(std::move(free_gradings)), torsion_(std::move(torsion)), mode_(mode) {
  for (const auto& t : torsion_) {
    if (t.exponent < 1) throw DomainError("torsion exponent must be positive");
  }
  std::sort(free_.begin(), free_.end());
  std::sort(torsion_.begin(), torsion_.end());
}

DvrModule DvrModule::shifted(int delta) const {
  auto f = free_;
  auto t = torsion_;
  for (int& d : f) d += delta;
  for (auto& s : t) s.grading += delta;
  return DvrModule(std::move(f), std::move(t), mode_);
}

DvrModule DvrModule::normalized() const {
  DvrModule out = free_.size() == 1 ? shifted(-free_.front()) : *this;
  out.mode_ = GradingMode::relative;
  return out;
}

std::string DvrModule::to_string(char variable) const {
  std::ostringstream os;
  bool first = true;
  for (int d : free_) {
    os << (first ? "" : " + ") << "F[" << variable << "](" << d << ")";
    first = false;
  }
  for (const auto& t : torsion_) {
    os << (first ? "" : " + ") << "F[" << variable << "]/" << variable << "^" << t.exponent << "(" << t.grading << ")";
    first = false;
  }
  if (first) os << "0";
  os << " [" << floer::to_string(mode_) << "]";
  return os.str();
}

bool operator==(const DvrModule& a, const DvrModule& b) {
  if (a.mode_ != b.mode_) throw DomainError("comparing absolute and relative modules");
  return a.free_ == b.free_ && a.torsion_ == b.torsion_;
}

DvrModule homology_dvr_at(const OneVarComplex& input, int truncation) {
  if (truncation <= 0) throw DomainError("truncation order must be positive");
  const auto reduced = gaussian_eliminate(input.truncated_to(truncation)).reduced;
  const int n = reduced.size();

  std::vector<std::map<int, WPoly>> cols(static_cast<std::size_t>(n));
  std::vector<std::set<int>> rows(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    for (const auto& [y, v] : reduced.differential.column(x)) {
      cols[static_cast<std::size_t>(x)][y] = v;
      rows[static_cast<std::size_t>(y)].insert(x);
    }
  }
  auto trunc = [&](const WPoly& p) { return p.truncated(truncation); };
  auto add_to = [&](int r, int c, const WPoly& v) {
    if (v.is_zero()) return;
    auto& col = cols[static_cast<std::size_t>(c)];
    auto it = col.find(r);
    WPoly updated = it == col.end() ? WPoly{} : it->second;
    updated += v;
    if (updated.is_zero()) {
      col.erase(r);
      rows[static_cast<std::size_t>(r)].erase(c);
    } else {
      col[r] = updated;
      rows[static_cast<std::size_t>(r)].insert(c);
    }
  };

  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  std::vector<TorsionSummand> torsion;
  while (true) {
    int px = -1;
    int py = -1;
    int best = truncation;
    for (int x = 0; x < n; ++x) {
      for (const auto& [y, v] : cols[static_cast<std::size_t>(x)]) {
        if (v.valuation() < best) {
          best = v.valuation();
          px = x;
          py = y;
        }
      }
    }
    if (px < 0) break;
    const int k = best;
    const WPoly unit_inv = cols[static_cast<std::size_t>(px)].at(py).shifted_down(k).inverse_mod(truncation);

    // clear row y: a' = a + t x for every other source a hitting y
    const std::set<int> sources = rows[static_cast<std::size_t>(py)];
    for (int a : sources) {
      if (a == px) continue;
      const WPoly t = trunc(cols[static_cast<std::size_t>(a)].at(py).shifted_down(k) * unit_inv);
      const auto col_x = cols[static_cast<std::size_t>(px)];
      for (const auto& [z, v] : col_x) add_to(z, a, trunc(t * v));
      const auto row_a = rows[static_cast<std::size_t>(a)];
      for (int src : row_a) add_to(px, src, trunc(t * cols[static_cast<std::size_t>(src)].at(a)));
    }
    // clear column x: y' = y + sum sigma_z z
    const auto targets = cols[static_cast<std::size_t>(px)];
    for (const auto& [z, v] : targets) {
      if (z == py) continue;
      const WPoly sigma = trunc(v.shifted_down(k) * unit_inv);
      const auto col_z = cols[static_cast<std::size_t>(z)];
      for (const auto& [w, u] : col_z) add_to(w, py, trunc(sigma * u));
      const auto row_y = rows[static_cast<std::size_t>(py)];
      for (int src : row_y) add_to(z, src, trunc(sigma * cols[static_cast<std::size_t>(src)].at(py)));
    }

    torsion.push_back({reduced.gradings[static_cast<std::size_t>(py)], k});
    for (int g : {px, py}) {
      for (const auto& [r, v] : cols[static_cast<std::size_t>(g)]) rows[static_cast<std::size_t>(r)].erase(g);
      cols[static_cast<std::size_t>(g)].clear();
      for (int src : std::set<int>(rows[static_cast<std::size_t>(g)])) cols[static_cast<std::size_t>(src)].erase(g);
      rows[static_cast<std::size_t>(g)].clear();
      alive[static_cast<std::size_t>(g)] = false;
    }
  }
  std::vector<int> free;
  for (int i = 0; i < n; ++i) {
    if (alive[static_cast<std::size_t>(i)]) free.push_back(reduced.gradings[static_cast<std::size_t>(i)]);
  }
  DvrModule out(std::move(free), std::move(torsion), input.mode);
  return input.mode == GradingMode::relative ? out.normalized() : out;
}

DvrResult homology_dvr(const OneVarComplex& c, const DvrOptions& options) {
  int n = options.truncation > 0 ? options.truncation : (c.truncation > 0 ? c.truncation : 2 * c.grading_span() + 8);
  // a homogeneous entry W^k joins gradings 2k - 1 apart, so k never exceeds this
  const int exact = (c.grading_span() + 1) / 2 + 1;
  n = std::max(n, exact);
  if (n > options.max_truncation) {
    throw TruncationError("homology_dvr: truncation order " + std::to_string(n) + " exceeds the cap " +
                          std::to_string(options.max_truncation));
  }
  while (true) {
    DvrModule at_n = homology_dvr_at(c, n);
    DvrModule at_next = homology_dvr_at(c, n + 4);
    if (at_n == at_next) return {std::move(at_n), true, n};
    if (n >= options.max_truncation) {
      throw TruncationError("homology_dvr: no stable truncation order up to " + std::to_string(options.max_truncation));
    }
    n = std::min(2 * n, options.max_truncation);
  }
}

int d_invariant(const DvrModule& m) {
  if (m.free_rank() != 1) {
    throw DomainError("d-invariant needs exactly one free summand, found " + std::to_string(m.free_rank()));
  }
  return m.free_gradings().front();
}

PlusView plus_and_hat_views(const DvrModule& m) {
  PlusView view;
  view.mode = m.mode();
  for (int d : m.free_gradings()) {
    view.tower_bottoms.push_back(d + 2);
    view.hat_gradings[d] += 1;
  }
  for (const auto& t : m.torsion()) {
    view.torsion.push_back({t.grading + 1, t.exponent});
    view.hat_gradings[t.grading] += 1;
    view.hat_gradings[t.grading - 2 * t.exponent + 1] += 1;
  }
  view.hat_dimension = m.free_rank() + 2 * static_cast<int>(m.torsion().size());
  return view;
}

}  // namespace floer
