#pragma once

// Coefficient rings over F2: the two-variable ring F2[U,V] (sparse, monomial
// sets) and the one-variable ring F2[W] (dense bit vectors), the latter also
// used for the truncations F2[W]/(W^N).

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace floer {

struct Monomial {
  int u_exp = 0;
  int v_exp = 0;

  auto operator<=>(const Monomial&) const = default;
  Monomial operator*(const Monomial& o) const { return {u_exp + o.u_exp, v_exp + o.v_exp}; }
  bool is_one() const { return u_exp == 0 && v_exp == 0; }
  std::string to_string() const;
};

/// Polynomial in F2[U,V]; terms are kept sorted and unique (set semantics).
class PolyUV {
 public:
  PolyUV() = default;
  PolyUV(Monomial m) : terms_{m} {}  // NOLINT(google-explicit-constructor)
  explicit PolyUV(std::vector<Monomial> terms);

  static PolyUV one() { return PolyUV(Monomial{0, 0}); }
  static PolyUV u_power(int a) { return PolyUV(Monomial{a, 0}); }
  static PolyUV v_power(int b) { return PolyUV(Monomial{0, b}); }

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.front().is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_constant_term() const;

  /// Adds a single monomial; adding it twice cancels.
  void toggle(const Monomial& m);

  PolyUV& operator+=(const PolyUV& o);
  friend PolyUV operator+(PolyUV a, const PolyUV& b) { return a += b; }
  friend PolyUV operator*(const PolyUV& a, const PolyUV& b);
  bool operator==(const PolyUV&) const = default;

  /// Exchanges the roles of U and V.
  PolyUV swapped() const;
  std::string to_string() const;

 private:
  std::vector<Monomial> terms_;
};

/// Polynomial in F2[W], dense bit storage. Used both exactly and modulo W^N.
class WPoly {
 public:
  WPoly() = default;

  static WPoly zero() { return {}; }
  static WPoly one() { return monomial(0); }
  static WPoly monomial(int k);

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1U; }
  bool is_monomial() const;
  /// Highest exponent, or -1 for zero.
  int degree() const;
  /// Lowest exponent, or -1 for zero.
  int valuation() const;
  bool coeff(int k) const;
  void flip(int k);

  WPoly& operator+=(const WPoly& o);
  friend WPoly operator+(WPoly a, const WPoly& b) { return a += b; }
  friend WPoly operator*(const WPoly& a, const WPoly& b);
  bool operator==(const WPoly&) const = default;

  /// Reduction modulo W^n; n <= 0 means no truncation.
  WPoly truncated(int n) const;
  /// Multiplication by W^k.
  WPoly shifted_up(int k) const;
  /// Exact division by W^k; requires valuation() >= k.
  WPoly shifted_down(int k) const;
  /// Inverse modulo W^n of a series with constant term 1.
  WPoly inverse_mod(int n) const;

  std::string to_string(char var = 'W') const;

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

}  // namespace floer
