#pragma once

#include <string>
#include <vector>

namespace floer {

/// g x g matrix of algebraic intersection numbers alpha_i . beta_j.
using IntMatrix = std::vector<std::vector<long long>>;

/// Finitely generated abelian group Z^free_rank + sum Z/d_i with d_1 | d_2 | ...
struct AbelianGroup {
  std::vector<long long> invariant_factors;  ///< all >= 2
  int free_rank = 0;

  bool is_finite() const { return free_rank == 0; }
  /// Order of a finite group (0 when infinite).
  long long order() const;
  std::string to_string() const;
  bool operator==(const AbelianGroup&) const = default;
};

/// Diagonal of the Smith normal form (nonzero entries, absolute values, in
/// divisibility order) of a rectangular integer matrix.
std::vector<long long> smith_diagonal(const IntMatrix& m);

/// Cokernel of the presentation matrix.
AbelianGroup h1_group(const IntMatrix& m);

/// Appends a row and column with a single 1 on the diagonal.
IntMatrix stabilize(const IntMatrix& m);

long long determinant(const IntMatrix& m);

struct HfDimensionReport {
  long long order = 0;
  int total_dimension = 0;
  bool bound_holds = false;   ///< total >= |H1|
  bool equality = false;      ///< total == |H1|
  bool all_classes_minimal = false;  ///< every class has hat dimension 1
  bool consistent = false;    ///< bound holds and equality <=> all classes minimal
};

/// Compares per-class hat dimensions of HF with |H1| of the presented manifold.
/// Throws DomainError when H1 is infinite.
HfDimensionReport hf_dimension_check(const IntMatrix& m, const std::vector<int>& hat_dims);

}  // namespace floer
