#pragma once

// Text forms of scalars and polynomials.

#include <string>
#include <string_view>
#include <vector>

#include "skewpbw/polynomial.hpp"

namespace skewpbw {

/// Parses the scalar grammar (integers, a/b, i, z/zeta, sums, products,
/// powers) into `field`. Residues are reduced mod p in GF(p).
Scalar parse_scalar(std::string_view text, const Field& field);

/// Parses a polynomial; variables may appear in any order and are
/// normal-ordered through the ring's multiplication, so "y*x" in the quantum
/// plane yx = 2xy yields 2*x*y. Declared variable names shadow i, z, zeta.
/// Throws ParseError with the byte offset of the offending token.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Comma-separated list of polynomials.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring);

/// Comma-separated list of scalars, e.g. a point "1, 0, -1/2".
std::vector<Scalar> parse_scalar_list(std::string_view text, const Field& field);

/// A coefficient as it appears in front of a monomial: bare when it is a
/// rational number, parenthesized otherwise.
std::string coefficient_string(const Scalar& c);

/// "x^2*y" for the given exponent; "1" for the zero exponent.
std::string monomial_string(const Exponent& alpha, const std::vector<std::string>& names);

}  // namespace skewpbw
