#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "floer/polynomial.hpp"
#include "floer/sparse_matrix.hpp"

namespace floer {

struct Bigrading {
  int gr_u = 0;
  int gr_v = 0;

  auto operator<=>(const Bigrading&) const = default;
  Bigrading operator+(const Bigrading& o) const { return {gr_u + o.gr_u, gr_v + o.gr_v}; }
  Bigrading operator-() const { return {-gr_u, -gr_v}; }
  /// (gr_u - gr_v) / 2; only meaningful when the parities agree.
  int alexander() const { return (gr_u - gr_v) / 2; }
  bool parity_ok() const { return ((gr_u - gr_v) % 2) == 0; }
};

struct Generator {
  std::string label;
  Bigrading grading;
};

/// Free, finitely generated complex over F2[U,V]. Entry (y, x) of the
/// differential is the coefficient of y in the boundary of x. gr(U) = (-2,0),
/// gr(V) = (0,-2) and the differential has bidegree (-1,-1).
struct BigradedComplex {
  std::vector<Generator> generators;
  SparseMatrix<PolyUV> differential;

  BigradedComplex() = default;
  explicit BigradedComplex(std::vector<Generator> gens);

  int size() const { return static_cast<int>(generators.size()); }
  const Bigrading& grading(int i) const { return generators.at(static_cast<std::size_t>(i)).grading; }
  const std::string& label(int i) const { return generators.at(static_cast<std::size_t>(i)).label; }
  int alexander(int i) const { return grading(i).alexander(); }
  std::optional<int> index_of(const std::string& label) const;

  /// Adds `coeff * target` to the boundary of `source`.
  void add_term(int source, int target, const PolyUV& coeff);
  void add_term(const std::string& source, const std::string& target, const PolyUV& coeff);

  /// Boundary of a generator rendered as "U b + V c".
  std::string boundary_string(int i) const;
  int min_alexander() const;
  int max_alexander() const;
};

struct ComplexValidation {
  bool square_zero = true;
  bool homogeneous = true;
  bool parity = true;
  std::vector<std::string> problems;

  bool ok() const { return square_zero && homogeneous && parity; }
};

ComplexValidation validate_complex(const BigradedComplex& c);

/// One generator in bigrading `shift` with zero differential.
BigradedComplex unknot_complex(Bigrading shift = {0, 0});

/// Tensor product over F2[U,V]; generator (i, j) sits at index i * c2.size() + j.
BigradedComplex tensor_product(const BigradedComplex& c1, const BigradedComplex& c2);

/// Hom into F2[U,V]: transposed differential, negated bigradings. Labels gain
/// or lose a trailing '*', so dualize(dualize(c)) == c exactly.
BigradedComplex dualize(const BigradedComplex& c);

/// Exchanges U and V (and gr_u with gr_v).
BigradedComplex swap_uv(const BigradedComplex& c);

/// Permutation of generators carrying c1 onto c2 (gradings and differential
/// equal entrywise), if one exists.
std::optional<std::vector<int>> find_isomorphism(const BigradedComplex& c1, const BigradedComplex& c2);

/// Same gradings and differential in the same generator order, labels ignored.
bool same_structure(const BigradedComplex& c1, const BigradedComplex& c2);

}  // namespace floer
