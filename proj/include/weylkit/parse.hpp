#pragma once

#include <string_view>
#include <vector>

#include "weylkit/poly.hpp"
#include "weylkit/weyl_op.hpp"

namespace weylkit {

// Shared text grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | var ['^' integer]
//   var    := ('x'|'z'|'d'|'xi')<index> | 't'
// Whitespace-insensitive. Rational coefficients as p/q. Parsing a Weyl
// operator multiplies factors in written order, so "d1*x1" lands in normal
// form x1*d1 + 1.

// Operator over N variables; x<i> and z<i> are synonyms for position i.
WeylOp parse_weyl_op(std::string_view text, std::size_t n);

// List separated by ';'.
std::vector<WeylOp> parse_weyl_ops(std::string_view text, std::size_t n);

// Commutative polynomial; var tokens resolve against the ring's names
// (z<i>/x<i> both hit a position variable named z<i>).
Poly parse_poly(std::string_view text, const RingPtr& ring);

std::vector<Poly> parse_polys(std::string_view text, const RingPtr& ring);

// Largest variable index mentioned (for picking a default ambient N).
std::size_t scan_max_index(std::string_view text);

}  // namespace weylkit
