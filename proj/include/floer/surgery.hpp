#pragma once

#include <map>
#include <string>
#include <vector>

#include "floer/complex.hpp"
#include "floer/eliminate.hpp"
#include "floer/module.hpp"
#include "floer/wcomplex.hpp"

namespace floer {

/// Quasi-isomorphism from the U-localized summand at s to B_s, built as
/// inclusion_B o (tower identification) o projection_U through minimal models.
struct FlipMap {
  int s = 0;
  OneVarComplex source;         ///< U-localized summand
  OneVarComplex target;         ///< B_s
  SparseMatrix<WPoly> matrix;   ///< target x source
  OneVarReduction source_model;
  OneVarReduction target_model;

  bool is_chain_map() const;
  /// The tower generator of the source goes to the tower generator of the target.
  bool is_quasi_isomorphism() const;
};

FlipMap flip_map(const BigradedComplex& c, int s, PivotOrder order = PivotOrder::fewest_fill);

/// Spin^c class representative of s for n-surgery, in (-|n|/2, |n|/2].
int spin_c_class(int s, int n);

/// HF^- of S^3_n(K) in class [s] via A_s (requires n >= 1, n >= 2g - 1 and
/// |s| <= n/2). Relative grading, free generator at 0.
DvrResult large_surgery(const BigradedComplex& c, int n, int s, const DvrOptions& options = {});

struct ConeColumn {
  char kind = 'A';  ///< 'A' or 'B'
  int s = 0;
  int first = 0;    ///< index of its first generator in the class complex
  int size = 0;
  int offset = 0;   ///< grading shift applied to the column
};

struct ConeEdge {
  int from = 0;      ///< column index (an A column)
  int to = 0;        ///< column index (a B column)
  bool flip = false; ///< false: iota_V, true: V^n phi iota_U
};

struct ConeClass {
  int spin_c = 0;
  OneVarComplex complex;
  std::vector<ConeColumn> columns;
  std::vector<ConeEdge> edges;
};

struct ConeSystem {
  int n = 0;
  int genus = 0;
  int window = 0;  ///< A_s kept for |s| <= window, B_s for n - window <= s <= window
  std::vector<ConeClass> classes;
};

struct ConeOptions {
  int window_slack = 0;
  PivotOrder flip_order = PivotOrder::fewest_fill;
};

ConeSystem build_cone(const BigradedComplex& c, int n, const ConeOptions& options = {});

struct ClassHomology {
  int spin_c = 0;
  DvrModule module;
  bool stable = false;
  int truncation = 0;
};

struct SurgeryResult {
  int n = 0;
  std::map<int, ClassHomology> classes;
};

struct SurgeryOptions {
  ConeOptions cone;
  DvrOptions dvr;
};

/// HF^- of S^3_n(K) per spin^c class from the truncated mapping cone.
SurgeryResult surgery_homology(const BigradedComplex& c, int n, const SurgeryOptions& options = {});

/// The same classes computed by large_surgery; requires n >= max(1, 2g - 1).
SurgeryResult large_surgery_all(const BigradedComplex& c, int n, const DvrOptions& options = {});

bool is_lspace_result(const SurgeryResult& r);

}  // namespace floer
