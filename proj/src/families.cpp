#include "knotcert/families.hpp"

#include <stdexcept>

#include "knotcert/tangle.hpp"

namespace knotcert {

Diagram pretzel_diagram(const std::vector<int>& half_twists) {
    if (half_twists.empty()) throw std::invalid_argument("pretzel needs at least one column");
    TangleBuilder b;
    std::vector<ColumnPorts> cols;
    cols.reserve(half_twists.size());
    for (int m : half_twists) cols.push_back(add_twist_column(b, m));
    const int k = static_cast<int>(cols.size());
    for (int i = 0; i < k; ++i) {
        const ColumnPorts& cur = cols[i];
        const ColumnPorts& nxt = cols[(i + 1) % k];
        b.connect(cur.top_right, nxt.top_left);
        b.connect(cur.bottom_right, nxt.bottom_left);
    }
    return b.build();
}

}  // namespace knotcert
