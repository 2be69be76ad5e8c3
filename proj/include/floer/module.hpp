#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "floer/complex.hpp"
#include "floer/wcomplex.hpp"

namespace floer {

/// Finite-dimensional graded F2-vector space. Keys are (first, second)
/// gradings; singly graded spaces use second = 0.
struct GradedVectorSpace {
  std::map<std::pair<int, int>, int> dims;

  int total() const;
  int at(int first, int second = 0) const;
  bool operator==(const GradedVectorSpace&) const = default;
};

/// Homology of a complex whose differential entries are constants, per
/// bigrading (gr_u, gr_v). Throws DomainError on a non-constant entry.
GradedVectorSpace homology_f2(const BigradedComplex& c);

/// F2-dimensions of the homology over F[U,V] in each bigrading of the box
/// [u_min, u_max] x [v_min, v_max]; the degree (p, q) part is spanned by
/// U^i V^j x with i, j >= 0.
GradedVectorSpace homology_uv_window(const BigradedComplex& c, int u_min, int u_max, int v_min, int v_max);

struct TorsionSummand {
  int grading = 0;   ///< grading of the generator
  int exponent = 1;  ///< W^exponent kills it

  auto operator<=>(const TorsionSummand&) const = default;
};

/// Graded module over F[W] (or F[[W]]): free summands F[W]_(d) and torsion
/// summands F[W]/(W^n) generated in grading c. Always kept in canonical
/// (sorted) form.
class DvrModule {
 public:
  DvrModule() = default;
  DvrModule(std::vector<int> free_gradings, std::vector<TorsionSummand> torsion,
            GradingMode mode = GradingMode::absolute);

  const std::vector<int>& free_gradings() const { return free_; }
  const std::vector<TorsionSummand>& torsion() const { return torsion_; }
  GradingMode mode() const { return mode_; }
  int free_rank() const { return static_cast<int>(free_.size()); }

  /// Adds `delta` to every grading.
  DvrModule shifted(int delta) const;
  /// Relative copy shifted so the single free generator sits at 0 (no shift
  /// when the free rank is not 1).
  DvrModule normalized() const;
  std::string to_string(char variable = 'W') const;

  /// Comparing modules in different grading modes throws DomainError.
  friend bool operator==(const DvrModule& a, const DvrModule& b);

 private:
  std::vector<int> free_;
  std::vector<TorsionSummand> torsion_;
  GradingMode mode_ = GradingMode::absolute;
};

struct DvrOptions {
  int truncation = 0;          ///< 0 selects 2 * grading span + 8; raised to (span + 1) / 2 + 1 if smaller
  int max_truncation = 4096;   ///< doubling stops here
};

struct DvrResult {
  DvrModule module;
  bool stable = false;  ///< N and N + 4 gave the same module
  int truncation = 0;   ///< the N that was certified
};

/// Homology of a complex over F[W] computed modulo W^N: unit cancellation,
/// then pivoting on the entry of least W-valuation. Chains that survive to
/// length N are reported free. Throws TruncationError when no N up to the
/// cap is stable. Relative inputs come back normalized().
DvrResult homology_dvr(const OneVarComplex& c, const DvrOptions& options = {});

/// Single fixed truncation order, no certificate.
DvrModule homology_dvr_at(const OneVarComplex& c, int truncation);

/// Grading of the unique free generator; DomainError otherwise.
int d_invariant(const DvrModule& m);

struct PlusView {
  std::vector<int> tower_bottoms;       ///< d + 2 for each free summand
  std::vector<TorsionSummand> torsion;  ///< gradings raised by one
  int hat_dimension = 0;
  std::map<int, int> hat_gradings;      ///< grading -> dimension of the hat flavor
  GradingMode mode = GradingMode::absolute;
};

PlusView plus_and_hat_views(const DvrModule& m);

}  // namespace floer
