#pragma once

#include <map>
#include <vector>

#include "knotcert/diagram.hpp"

namespace knotcert {

// A crossing stub while assembling a diagram: node index plus corner
// 0=SW, 1=SE, 2=NE, 3=NW (counterclockwise).
struct TPort {
    int node = -1;
    int corner = -1;
    auto operator<=>(const TPort&) const = default;
};

// Builds PD codes from crossings laid out in the plane.  Each crossing is a
// square cell whose strands run along the diagonals (SW-NE and SE-NW); arcs
// connect free corners.  build() traces the strands, orients every component,
// numbers the arcs along the flow and emits the PD tuples.  The Diagram
// constructor then re-derives orientations and checks the face census, so a
// port wiring that is not actually drawable in the plane is rejected.
class TangleBuilder {
public:
    // over_diagonal: +1 when the SW-NE strand crosses on top, -1 for SE-NW
    int add_crossing(int over_diagonal);
    void connect(TPort a, TPort b);
    void add_free_loop() { ++loops_; }

    TPort port(int node, int corner) const;
    Diagram build() const;

private:
    std::vector<int> over_;
    std::map<TPort, TPort> mate_;
    int loops_ = 0;
};

// Stacks |half_twists| crossings into a vertical two-strand twist region and
// reports its four boundary corners.  The sign of half_twists selects which
// diagonal crosses on top in every cell.
struct ColumnPorts {
    TPort bottom_left, bottom_right, top_left, top_right;
};
ColumnPorts add_twist_column(TangleBuilder& b, int half_twists);

}  // namespace knotcert
