#pragma once

#include "knotcert/diagram.hpp"
#include "knotcert/laurent.hpp"

namespace knotcert {

// Kauffman bracket in the variable A (single circle -> 1, extra circles
// -> -A^2 - A^{-2} each).  Resolves crossings in list order, merging edges
// with a union-find and memoizing residual diagrams, so twist regions
// collapse instead of branching exponentially.
LaurentPoly kauffman_bracket(const Diagram& d);

// Same value by expanding all 2^n resolutions directly; cross-check for the
// memoized version.  Refuses diagrams with more than 22 crossings.
LaurentPoly kauffman_bracket_enumerated(const Diagram& d);

// Jones polynomial in the variable q: bracket times (-A^3)^{-writhe}, then
// A^2 -> -q^{-1}.  Knots land in even powers of q; an unlinked pair of
// circles gives q + q^{-1}.
LaurentPoly jones_polynomial(const Diagram& d);

// substitute q = -t^{1/2}: the classical normalization, integer powers of t
// on knots
LaurentPoly classical_form(const LaurentPoly& v);

// q^{-2} V(plus) - q^2 V(minus) == (q^{-1} - q) V(zero)
bool verify_skein_triple(const Diagram& plus, const Diagram& minus, const Diagram& zero);

}  // namespace knotcert
