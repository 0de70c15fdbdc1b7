#include "knotcert/kauffman.hpp"

#include <set>
#include <unordered_map>

namespace knotcert {

namespace {

// first crossing reached on its under-strand before being seen from on top,
// walking components in order of their smallest edge label; -1 when the
// diagram is descending
int first_bad_crossing(const Diagram& d) {
    std::vector<bool> visited(d.crossing_count(), false);
    std::set<int> walked;
    for (int seed : d.edge_ids()) {
        if (walked.count(seed)) continue;
        int e = seed;
        do {
            walked.insert(e);
            auto [a, b] = d.edge_ends(e);
            const Dart& head = d.incoming(a.crossing, a.port) ? a : b;
            if (!visited[head.crossing]) {
                if (head.port == 0) return head.crossing;
                visited[head.crossing] = true;
            }
            e = d.crossings()[head.crossing].e[(head.port + 2) % 4];
        } while (e != seed);
    }
    return -1;
}

LaurentPoly alexander_rec(const Diagram& input, std::unordered_map<std::string, LaurentPoly>& memo) {
    Diagram d = reidemeister_reduced(input);
    if (d.is_split()) return LaurentPoly::zero();
    if (d.crossing_count() == 0) return LaurentPoly::one();  // single circle

    std::string key = d.canonical_key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int c = first_bad_crossing(d);
    LaurentPoly result;
    if (c == -1) {
        // descending: an unknot, or a stack of unknots that pull apart
        result = d.component_count() == 1 ? LaurentPoly::one() : LaurentPoly::zero();
    } else {
        LaurentPoly half_z = LaurentPoly::monomial2(1, 1) - LaurentPoly::monomial2(1, -1);
        LaurentPoly switched = alexander_rec(d.switched(c), memo);
        LaurentPoly smoothed = alexander_rec(d.smoothed(c), memo);
        result = d.crossing_sign(c) > 0 ? switched + half_z * smoothed
                                        : switched - half_z * smoothed;
    }
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

LaurentPoly alexander_skein(const Diagram& d) {
    std::unordered_map<std::string, LaurentPoly> memo;
    return alexander_rec(d, memo);
}

}  // namespace knotcert
