#pragma once

#include "knotcert/diagram.hpp"
#include "knotcert/laurent.hpp"

namespace knotcert {

// Symmetric Alexander polynomial (Conway normalization: unknot -> 1, split
// links -> 0), computed by resolving crossings against a descending template:
// walking each component from its lowest edge, the first crossing met on the
// under-strand before its over-strand is switched and smoothed via
//   A(L+) - A(L-) = (t^{1/2} - t^{-1/2}) A(L0).
// Curl and parallel-strand reductions are applied between steps; results are
// memoized on the canonical key.
LaurentPoly alexander_skein(const Diagram& d);

}  // namespace knotcert
