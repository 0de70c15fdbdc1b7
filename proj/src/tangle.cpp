#include "knotcert/tangle.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotcert {

int TangleBuilder::add_crossing(int over_diagonal) {
    if (over_diagonal != 1 && over_diagonal != -1)
        throw std::invalid_argument("over_diagonal must be +1 or -1");
    over_.push_back(over_diagonal);
    return static_cast<int>(over_.size()) - 1;
}

TPort TangleBuilder::port(int node, int corner) const {
    if (node < 0 || node >= static_cast<int>(over_.size()) || corner < 0 || corner > 3)
        throw std::invalid_argument("no such port");
    return TPort{node, corner};
}

void TangleBuilder::connect(TPort a, TPort b) {
    port(a.node, a.corner);
    port(b.node, b.corner);
    if (a == b) throw std::invalid_argument("cannot connect a port to itself");
    if (mate_.count(a) || mate_.count(b)) throw std::invalid_argument("port already connected");
    mate_[a] = b;
    mate_[b] = a;
}

Diagram TangleBuilder::build() const {
    const int n = static_cast<int>(over_.size());
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k)
            if (!mate_.count(TPort{c, k}))
                throw std::invalid_argument("unconnected port at crossing " + std::to_string(c));
    if (n == 0) return Diagram::from_crossings({}, loops_);

    // Trace the strands.  An arc is a mate pair; walking an arc into a corner
    // continues through the crossing to the opposite corner.  Arcs are
    // numbered in walk order, components seeded from the smallest unvisited
    // port, giving a deterministic labelling.
    std::map<TPort, int> label;      // arc label at each port
    std::map<TPort, bool> inward;    // arc at this port flows into the node
    int next = 1;
    for (const auto& [seed, seed_mate] : mate_) {
        if (label.count(seed)) continue;
        TPort from = seed;
        do {
            TPort to = mate_.at(from);
            label[from] = label[to] = next++;
            inward[from] = false;
            inward[to] = true;
            from = TPort{to.node, (to.corner + 2) % 4};
        } while (from != seed);
    }

    std::vector<Crossing> out;
    out.reserve(n);
    for (int c = 0; c < n; ++c) {
        // the under strand runs along the other diagonal
        std::array<int, 2> under = over_[c] == 1 ? std::array<int, 2>{1, 3} : std::array<int, 2>{0, 2};
        int start = -1;
        for (int corner : under)
            if (inward.at(TPort{c, corner})) start = corner;
        if (start == -1) throw std::logic_error("under strand has no inward corner");
        Crossing x{};
        for (int k = 0; k < 4; ++k) x.e[k] = label.at(TPort{c, (start + k) % 4});
        out.push_back(x);
    }
    return Diagram::from_crossings(std::move(out), loops_);
}

ColumnPorts add_twist_column(TangleBuilder& b, int half_twists) {
    if (half_twists == 0) throw std::invalid_argument("twist column needs at least one crossing");
    int handedness = half_twists > 0 ? 1 : -1;
    int count = std::abs(half_twists);
    int first = -1, prev = -1;
    for (int i = 0; i < count; ++i) {
        int c = b.add_crossing(handedness);
        if (i == 0)
            first = c;
        else {
            // stack: previous cell's top corners meet this cell's bottom corners
            b.connect(TPort{prev, 3}, TPort{c, 0});  // NW -> SW
            b.connect(TPort{prev, 2}, TPort{c, 1});  // NE -> SE
        }
        prev = c;
    }
    return ColumnPorts{TPort{first, 0}, TPort{first, 1}, TPort{prev, 3}, TPort{prev, 2}};
}

}  // namespace knotcert
