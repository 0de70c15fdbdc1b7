#pragma once

#include <vector>

#include "knotcert/diagram.hpp"

namespace knotcert {

// Cyclic closure of vertical twist columns: column i's top-right strand joins
// column i+1's top-left, likewise along the bottom, wrapping around at the
// ends.  Every entry must be nonzero; its sign picks the handedness of the
// column's crossings.
Diagram pretzel_diagram(const std::vector<int>& half_twists);

}  // namespace knotcert
