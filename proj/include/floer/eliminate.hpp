#pragma once

#include <vector>

#include "floer/complex.hpp"
#include "floer/wcomplex.hpp"

namespace floer {

/// Pivot selection for cancelling unit arrows. The result is a homotopy
/// equivalent complex either way; only the basis differs.
enum class PivotOrder {
  fewest_fill,  ///< smallest (|column|-1)*(|row|-1), ties to lowest indices
  last_index,   ///< highest source index first
};

/// Output of cancelling every unit arrow x -> y. `kept` lists the original
/// indices that survive (in increasing order); the reduced complex uses the
/// same labels and gradings. projection: original -> reduced, inclusion:
/// reduced -> original, homotopy: original -> original, with
/// inclusion*projection + id = d*homotopy + homotopy*d.
template <class Complex, class R>
struct Reduction {
  Complex reduced;
  std::vector<int> kept;
  SparseMatrix<R> projection;
  SparseMatrix<R> inclusion;
  SparseMatrix<R> homotopy;
};

using BigradedReduction = Reduction<BigradedComplex, PolyUV>;
using OneVarReduction = Reduction<OneVarComplex, WPoly>;

/// Cancels arrows whose coefficient is exactly 1.
BigradedReduction gaussian_eliminate(const BigradedComplex& c, PivotOrder order = PivotOrder::fewest_fill);

/// Cancels unit arrows. Over F2[W] (truncation 0) the only unit is 1; modulo
/// W^N every entry with constant term 1 is a unit and is inverted by a
/// truncated geometric series.
OneVarReduction gaussian_eliminate(const OneVarComplex& c, PivotOrder order = PivotOrder::fewest_fill);

}  // namespace floer
