#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "floer/complex.hpp"
#include "floer/module.hpp"

namespace floer {

struct OneOneDiagram;

/// Integer Laurent polynomial in t.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  /// (exponent, coefficient) pairs; repeated exponents are summed.
  explicit LaurentPoly(const std::vector<std::pair<int, long long>>& terms);

  static LaurentPoly one() { return LaurentPoly({{0, 1}}); }

  const std::map<int, long long>& coefficients() const { return coeffs_; }
  long long coeff(int exponent) const;
  bool is_zero() const { return coeffs_.empty(); }
  int max_degree() const;
  int min_degree() const;
  long long at_one() const;
  bool is_symmetric() const;
  /// t -> t^-1
  LaurentPoly inverted() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly&) const = default;

  std::vector<std::pair<int, long long>> terms() const;
  std::string to_string() const;

 private:
  void add(int exponent, long long c);
  std::map<int, long long> coeffs_;
};

/// Recursive knot description.
struct KnotSpec {
  enum class Kind { lspace, alternating, sum, mirror, reverse, one_one };

  Kind kind = Kind::lspace;
  LaurentPoly alexander = LaurentPoly::one();
  int signature = 0;
  std::vector<KnotSpec> children;  ///< summands, or the single operand of mirror/reverse
  std::string diagram_path;
  std::shared_ptr<const OneOneDiagram> diagram;

  static KnotSpec lspace(LaurentPoly delta);
  static KnotSpec alternating(LaurentPoly delta, int signature);
  static KnotSpec sum(std::vector<KnotSpec> summands);
  static KnotSpec mirror(KnotSpec of);
  static KnotSpec reverse(KnotSpec of);
  static KnotSpec one_one(std::shared_ptr<const OneOneDiagram> diagram, std::string path = {});
};

std::string to_string(KnotSpec::Kind kind);

/// Staircase model for a polynomial sum_i (-1)^i t^(a_i) with a_0 > a_1 > ...
/// Throws DomainError when delta does not have that shape.
BigradedComplex staircase_from_alexander(const LaurentPoly& delta);

/// Thin model: one staircase (for tau = -sigma/2) plus boxes, supported on the
/// diagonal gr_u = A + sigma/2. Throws DomainError on inconsistent input.
BigradedComplex thin_from_alexander_signature(const LaurentPoly& delta, int sigma);

/// The four-generator acyclic-at-U=V=1 summand centred at Alexander grading
/// s0 on the diagonal gr_u = A + shift.
BigradedComplex box_complex(int s0, int shift);

BigradedComplex build(const KnotSpec& spec);

/// Product of leaf polynomials (mirror applies t -> t^-1). Empty when the
/// spec contains a diagram leaf.
std::optional<LaurentPoly> expected_alexander(const KnotSpec& spec);

/// Homology at U = V = 0 keyed by (gr_u, A).
GradedVectorSpace hfk_hat(const BigradedComplex& c);

/// Homology at V = 0 over F[U], graded by gr_u. Throws DomainError unless the
/// free rank is one.
DvrModule hfk_minus(const BigradedComplex& c);

int genus(const BigradedComplex& c);
bool is_fibered(const BigradedComplex& c);
LaurentPoly euler_characteristic(const BigradedComplex& c);

}  // namespace floer
