#pragma once

#include <string>
#include <vector>

#include "floer/polynomial.hpp"
#include "floer/sparse_matrix.hpp"

namespace floer {

enum class GradingMode { absolute, relative };

std::string to_string(GradingMode mode);

/// Singly graded free complex over F2[W] (truncation == 0) or over
/// F2[W]/(W^truncation). The variable lowers grading by 2 and the
/// differential lowers it by 1. `variable` only affects printing: the same
/// type carries F[U]-, F[V]- and F[W]-complexes.
struct OneVarComplex {
  std::vector<std::string> labels;
  std::vector<int> gradings;
  SparseMatrix<WPoly> differential;
  int truncation = 0;
  char variable = 'W';
  GradingMode mode = GradingMode::absolute;

  OneVarComplex() = default;
  OneVarComplex(std::vector<std::string> labels, std::vector<int> gradings, char variable = 'W');

  int size() const { return static_cast<int>(labels.size()); }
  void add_term(int source, int target, const WPoly& coeff);
  std::string boundary_string(int i) const;

  /// max grading - min grading (0 when empty).
  int grading_span() const;
  /// Copy with every entry reduced modulo W^n.
  OneVarComplex truncated_to(int n) const;
};

struct OneVarValidation {
  bool square_zero = true;
  bool homogeneous = true;
  std::vector<std::string> problems;
  bool ok() const { return square_zero && homogeneous; }
};

/// d^2 == 0 (modulo W^N when truncated) and every entry is a single power
/// W^k with target grading - 2k == source grading - 1.
OneVarValidation validate_one_var(const OneVarComplex& c);

}  // namespace floer
