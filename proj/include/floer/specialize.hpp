#pragma once

#include <string>
#include <variant>

#include "floer/complex.hpp"
#include "floer/wcomplex.hpp"

namespace floer {

enum class SpecializeMode { UV0, V0, U0, V1, U1, invertV, invertU };

/// Accepts "UV0", "V0", "U0", "V1", "U1", "invertV", "invertU"; anything else
/// throws SchemaError.
SpecializeMode parse_specialize_mode(const std::string& name);
std::string to_string(SpecializeMode mode);

/// U = V = 0: constant entries only, bigradings kept.
BigradedComplex set_uv_zero(const BigradedComplex& c);

/// One-variable specializations.
///   V0, V1: F[U]-complex graded by gr_u (V1 keeps every term, V0 only V-free ones)
///   U0, U1: F[V]-complex graded by gr_v
///   invertV: the V-localized summand B_s over F[W], W = UV, graded by gr_u.
///            Canonical generator V^(s - A(x)) x; a term U^a V^b y becomes W^a y.
///   invertU: the U-localized summand at s, canonical generator
///            U^(A(x) - s) x graded by gr_v(x) + 2s; a term U^a V^b y becomes W^b y.
/// UV0 is rejected here with DomainError; use set_uv_zero.
OneVarComplex specialize_one_var(const BigradedComplex& c, SpecializeMode mode, int s = 0);

using SpecializedComplex = std::variant<BigradedComplex, OneVarComplex>;
SpecializedComplex specialize(const BigradedComplex& c, SpecializeMode mode, int s = 0);
SpecializedComplex specialize(const BigradedComplex& c, const std::string& mode, int s = 0);

/// A_s: the Alexander grading s part of the complex as an F[W]-complex. The
/// canonical generator of x is U^(A(x)-s) x when A(x) >= s and V^(s-A(x)) x
/// otherwise, graded by its gr_u.
OneVarComplex alexander_summand(const BigradedComplex& c, int s);

/// B_s, same as specialize_one_var(c, invertV, s) but with labels carrying the
/// V-shift.
OneVarComplex b_summand(const BigradedComplex& c, int s);

/// The U-localized summand at s (the source of the flip map).
OneVarComplex u_localized_summand(const BigradedComplex& c, int s);

/// Exponent of W in the inclusion A_s -> B_s on the canonical generator of
/// generator i, i.e. max(A - s, 0); likewise max(s - A, 0) for A_s -> U-local.
int iota_v_exponent(const BigradedComplex& c, int i, int s);
int iota_u_exponent(const BigradedComplex& c, int i, int s);

}  // namespace floer
