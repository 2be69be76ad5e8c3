#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace floer {

/// Column-major sparse matrix over a coefficient ring R. Entry (row, col) is
/// the coefficient of basis element `row` in the image of basis element `col`.
/// R must provide is_zero(), operator+= and operator*.
template <class R>
class SparseMatrix {
 public:
  using Column = std::map<int, R>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), columns_(static_cast<std::size_t>(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(columns_.size()); }

  const Column& column(int c) const { return columns_.at(static_cast<std::size_t>(c)); }

  R at(int r, int c) const {
    const auto& col = column(c);
    auto it = col.find(r);
    return it == col.end() ? R{} : it->second;
  }

  void add(int r, int c, const R& value) {
    check(r, c);
    if (value.is_zero()) return;
    auto& col = columns_[static_cast<std::size_t>(c)];
    auto [it, inserted] = col.try_emplace(r, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) col.erase(it);
    }
  }

  void set(int r, int c, const R& value) {
    check(r, c);
    auto& col = columns_[static_cast<std::size_t>(c)];
    if (value.is_zero()) {
      col.erase(r);
    } else {
      col[r] = value;
    }
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  bool is_zero() const { return nnz() == 0; }

  SparseMatrix transpose() const {
    SparseMatrix t(cols(), rows());
    for (int c = 0; c < cols(); ++c) {
      for (const auto& [r, v] : column(c)) t.set(c, r, v);
    }
    return t;
  }

  template <class F>
  SparseMatrix map_entries(F&& f) const {
    SparseMatrix out(rows_, cols());
    for (int c = 0; c < cols(); ++c) {
      for (const auto& [r, v] : column(c)) out.add(r, c, f(v));
    }
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("SparseMatrix: dimension mismatch");
    SparseMatrix out(a.rows(), b.cols());
    for (int c = 0; c < b.cols(); ++c) {
      for (const auto& [k, bv] : b.column(c)) {
        for (const auto& [r, av] : a.column(k)) out.add(r, c, av * bv);
      }
    }
    return out;
  }

  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw std::invalid_argument("SparseMatrix: dimension mismatch");
    }
    for (int c = 0; c < b.cols(); ++c) {
      for (const auto& [r, v] : b.column(c)) a.add(r, c, v);
    }
    return a;
  }

  bool operator==(const SparseMatrix&) const = default;

  static SparseMatrix identity(int n, const R& one) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, one);
    return m;
  }

 private:
  void check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols()) {
      throw std::out_of_range("SparseMatrix: index out of range");
    }
  }

  int rows_ = 0;
  std::vector<Column> columns_;
};

}  // namespace floer
