#include "floer/h1.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

#include "floer/errors.hpp"

namespace floer {

namespace {

using boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<cpp_int>>;

BigMatrix widen(const IntMatrix& m) {
  BigMatrix out;
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

void check_rectangular(const IntMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.front().size()) throw SchemaError("matrix rows have different lengths");
  }
}

}  // namespace

long long AbelianGroup::order() const {
  if (free_rank > 0) return 0;
  long long n = 1;
  for (long long d : invariant_factors) n *= d;
  return n;
}

std::string AbelianGroup::to_string() const {
  std::string out;
  auto append = [&](const std::string& part) { out += (out.empty() ? "" : " + ") + part; };
  if (free_rank == 1) append("Z");
  if (free_rank > 1) append("Z^" + std::to_string(free_rank));
  for (long long d : invariant_factors) append("Z/" + std::to_string(d));
  return out.empty() ? "0" : out;
}

std::vector<long long> smith_diagonal(const IntMatrix& input) {
  if (input.empty() || input.front().empty()) return {};
  check_rectangular(input);
  BigMatrix a = widen(input);
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::vector<cpp_int> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block as pivot
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[pr][pc]))) {
          found = true;
          pr = i;
          pc = j;
        }
      }
    }
    if (!found) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const cpp_int q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const cpp_int q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // the pivot must divide the rest of the block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  std::vector<long long> out;
  for (const auto& d : diag) out.push_back(d.convert_to<long long>());
  return out;
}

AbelianGroup h1_group(const IntMatrix& m) {
  AbelianGroup g;
  if (m.empty()) return g;
  check_rectangular(m);
  const auto diag = smith_diagonal(m);
  g.free_rank = static_cast<int>(m.size()) - static_cast<int>(diag.size());
  for (long long d : diag) {
    if (d >= 2) g.invariant_factors.push_back(d);
  }
  return g;
}

IntMatrix stabilize(const IntMatrix& m) {
  const std::size_t g = m.size();
  IntMatrix out(g + 1, std::vector<long long>(g + 1, 0));
  for (std::size_t i = 0; i < g; ++i) {
    if (m[i].size() != g) throw SchemaError("intersection matrix must be square");
    for (std::size_t j = 0; j < g; ++j) out[i][j] = m[i][j];
  }
  out[g][g] = 1;
  return out;
}

long long determinant(const IntMatrix& m) {
  if (m.empty()) return 1;
  check_rectangular(m);
  if (m.size() != m.front().size()) throw SchemaError("determinant needs a square matrix");
  // fraction-free elimination
  BigMatrix a = widen(m);
  const std::size_t n = a.size();
  cpp_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return (a[n - 1][n - 1] * sign).convert_to<long long>();
}

HfDimensionReport hf_dimension_check(const IntMatrix& m, const std::vector<int>& hat_dims) {
  const AbelianGroup g = h1_group(m);
  if (!g.is_finite()) throw DomainError("H1 is infinite; the dimension bound needs a rational homology sphere");
  HfDimensionReport r;
  r.order = g.order();
  r.total_dimension = std::accumulate(hat_dims.begin(), hat_dims.end(), 0);
  r.bound_holds = r.total_dimension >= r.order;
  r.equality = r.total_dimension == r.order;
  r.all_classes_minimal = std::all_of(hat_dims.begin(), hat_dims.end(), [](int d) { return d == 1; }) &&
                          static_cast<long long>(hat_dims.size()) == r.order;
  r.consistent = r.bound_holds && (r.equality == r.all_classes_minimal);
  return r;
}

}  // namespace floer
