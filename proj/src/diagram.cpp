#include "knotcert/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace knotcert {

namespace {

// union-find over small dense index sets
struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    // returns false when already joined
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ';')) ++i;
}

int parse_int(const std::string& s, size_t& i) {
    skip_ws(s, i);
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("expected edge label at offset " + std::to_string(start));
    return std::stoi(s.substr(start, i - start));
}

void expect(const std::string& s, size_t& i, char c) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != c)
        throw std::invalid_argument(std::string("expected '") + c + "' at offset " + std::to_string(i));
    ++i;
}

}  // namespace

Diagram Diagram::parse_pd(const std::string& text) {
    std::vector<Crossing> crossings;
    int loops = 0;
    size_t i = 0;
    skip_ws(text, i);
    while (i < text.size()) {
        char c = text[i];
        if (c == 'X') {
            ++i;
            expect(text, i, '[');
            Crossing x{};
            for (int k = 0; k < 4; ++k) {
                x.e[k] = parse_int(text, i);
                if (k < 3) expect(text, i, ',');
            }
            expect(text, i, ']');
            crossings.push_back(x);
        } else if (c == 'U') {
            ++i;
            ++loops;
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c + "' at offset " +
                                        std::to_string(i));
        }
        skip_ws(text, i);
    }
    if (crossings.empty() && loops == 0) throw std::invalid_argument("empty diagram");
    return from_crossings(std::move(crossings), loops);
}

Diagram Diagram::from_crossings(std::vector<Crossing> crossings, int free_loops) {
    if (free_loops < 0) throw std::invalid_argument("negative free loop count");
    if (crossings.empty() && free_loops == 0) throw std::invalid_argument("empty diagram");
    Diagram d;
    d.crossings_ = std::move(crossings);
    d.free_loops_ = free_loops;
    d.validate_and_index();
    return d;
}

void Diagram::validate_and_index() {
    const int n = crossing_count();

    // index edge endpoints; every label must appear exactly twice
    edge_index_of_id_.clear();
    edge_id_of_index_.clear();
    ends_.clear();
    std::vector<int> seen;  // per dense edge: endpoints recorded so far
    for (int c = 0; c < n; ++c) {
        for (int p = 0; p < 4; ++p) {
            int id = crossings_[c].e[p];
            auto [it, fresh] = edge_index_of_id_.try_emplace(id, static_cast<int>(edge_id_of_index_.size()));
            if (fresh) {
                edge_id_of_index_.push_back(id);
                ends_.push_back({Dart{c, p}, Dart{}});
                seen.push_back(1);
            } else {
                int e = it->second;
                if (seen[e] >= 2)
                    throw std::invalid_argument("edge " + std::to_string(id) + " appears more than twice");
                ends_[e].second = Dart{c, p};
                seen[e] = 2;
            }
        }
    }
    for (size_t e = 0; e < seen.size(); ++e)
        if (seen[e] != 2)
            throw std::invalid_argument("edge " + std::to_string(edge_id_of_index_[e]) +
                                        " appears only once");

    // Orientation: port 0 is incoming, port 2 outgoing.  Each crossing has one
    // binary choice x: x=0 means the over-strand enters at port 3 (positive
    // crossing), x=1 means it enters at port 1 (negative).  Every edge needs
    // exactly one incoming endpoint; propagate via 2-coloring with parity.
    std::vector<int> x(n, -1);
    auto over_parity = [](int port) { return port == 1 ? 1 : 0; };  // incoming(c,port) == (x == parity)
    // seed from edges joining an under port to an over port
    std::vector<std::pair<int, int>> queue;  // (crossing, forced x)
    for (size_t e = 0; e < ends_.size(); ++e) {
        auto [d1, d2] = ends_[e];
        bool u1 = d1.port % 2 == 0, u2 = d2.port % 2 == 0;
        if (u1 && u2) {
            if (d1.port == d2.port)
                throw std::invalid_argument("edge " + std::to_string(edge_id_of_index_[e]) +
                                            " has inconsistent orientation");
        } else if (u1 != u2) {
            const Dart& under = u1 ? d1 : d2;
            const Dart& over = u1 ? d2 : d1;
            bool over_in = under.port == 2;  // opposite of the under endpoint
            int forced = over_in == (over_parity(over.port) == 1) ? 1 : 0;
            if (x[over.crossing] == -1) {
                x[over.crossing] = forced;
                queue.emplace_back(over.crossing, forced);
            } else if (x[over.crossing] != forced) {
                throw std::invalid_argument("inconsistent orientation at crossing " +
                                            std::to_string(over.crossing));
            }
        }
    }
    // adjacency through over-over edges: x[c1] xor x[c2] = parity
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (size_t e = 0; e < ends_.size(); ++e) {
        auto [d1, d2] = ends_[e];
        if (d1.port % 2 == 1 && d2.port % 2 == 1) {
            int parity = over_parity(d1.port) ^ over_parity(d2.port) ^ 1;
            if (d1.crossing == d2.crossing) {
                if (parity != 0)
                    throw std::invalid_argument("inconsistent orientation at crossing " +
                                                std::to_string(d1.crossing));
                continue;
            }
            adj[d1.crossing].emplace_back(d2.crossing, parity);
            adj[d2.crossing].emplace_back(d1.crossing, parity);
        }
    }
    for (size_t h = 0; h < queue.size(); ++h) {
        auto [c, v] = queue[h];
        for (auto [c2, parity] : adj[c]) {
            int v2 = v ^ parity;
            if (x[c2] == -1) {
                x[c2] = v2;
                queue.emplace_back(c2, v2);
            } else if (x[c2] != v2) {
                throw std::invalid_argument("inconsistent orientation at crossing " + std::to_string(c2));
            }
        }
    }
    // components never touched by an under-strand endpoint keep a free
    // orientation; fix it deterministically
    for (int c = 0; c < n; ++c) {
        if (x[c] != -1) continue;
        x[c] = 0;
        queue.clear();
        queue.emplace_back(c, 0);
        for (size_t h = 0; h < queue.size(); ++h) {
            auto [c1, v] = queue[h];
            for (auto [c2, parity] : adj[c1]) {
                int v2 = v ^ parity;
                if (x[c2] == -1) {
                    x[c2] = v2;
                    queue.emplace_back(c2, v2);
                } else if (x[c2] != v2) {
                    throw std::invalid_argument("inconsistent orientation at crossing " +
                                                std::to_string(c2));
                }
            }
        }
    }

    incoming_.assign(n, {});
    sign_.assign(n, 0);
    for (int c = 0; c < n; ++c) {
        incoming_[c][0] = true;
        incoming_[c][2] = false;
        incoming_[c][1] = x[c] == 1;
        incoming_[c][3] = x[c] == 0;
        sign_[c] = x[c] == 0 ? +1 : -1;
    }

    // strand components: under-in joins under-out, over joins over
    const int m = static_cast<int>(ends_.size());
    {
        DisjointSet ds(std::max(m, 1));
        for (int c = 0; c < n; ++c) {
            ds.unite(edge_index_of_id_.at(crossings_[c].e[0]), edge_index_of_id_.at(crossings_[c].e[2]));
            ds.unite(edge_index_of_id_.at(crossings_[c].e[1]), edge_index_of_id_.at(crossings_[c].e[3]));
        }
        strand_components_ = 0;
        for (int e = 0; e < m; ++e)
            if (ds.find(e) == e) ++strand_components_;
        if (m == 0) strand_components_ = 0;
    }

    // connected components of the 4-valent graph
    std::vector<int> comp_of(n, -1);
    graph_components_ = 0;
    {
        DisjointSet ds(std::max(n, 1));
        for (const auto& [d1, d2] : ends_) ds.unite(d1.crossing, d2.crossing);
        for (int c = 0; c < n; ++c) {
            int r = ds.find(c);
            if (comp_of[r] == -1) comp_of[r] = graph_components_++;
            comp_of[c] = comp_of[r];
        }
    }

    // Faces: walk with the region on the left.  Leaving a crossing through the
    // dart at port q, the walk follows that edge to its far end (c2, p2), turns
    // across the corner quadrant (p2+3)%4 and departs through that port.  Every
    // port serves as departure exactly once, so orbits partition the 4n darts.
    faces_.clear();
    corner_face_.assign(n, {-1, -1, -1, -1});
    auto other_end = [&](int e, int c, int p) {
        auto [d1, d2] = ends_[e];
        return (d1.crossing == c && d1.port == p) ? d2 : d1;
    };
    for (int c0 = 0; c0 < n; ++c0) {
        for (int p0 = 0; p0 < 4; ++p0) {
            if (corner_face_[c0][p0] != -1) continue;
            int face_id = static_cast<int>(faces_.size());
            faces_.emplace_back();
            Face& f = faces_.back();
            int c = c0, p = p0;
            do {
                corner_face_[c][p] = face_id;
                int e = edge_index_of_id_.at(crossings_[c].e[p]);
                f.edges.push_back(edge_id_of_index_[e]);
                Dart far = other_end(e, c, p);
                c = far.crossing;
                p = (far.port + 3) % 4;
                f.corners.emplace_back(c, p);
            } while (c != c0 || p != p0);
        }
    }
    // Euler check per connected component: a sphere embedding forces exactly
    // n_k + 2 faces on a component with n_k crossings
    if (n > 0) {
        std::vector<int> comp_crossings(graph_components_, 0), comp_faces(graph_components_, 0);
        for (int c = 0; c < n; ++c) ++comp_crossings[comp_of[c]];
        for (const Face& f : faces_)
            if (!f.corners.empty()) ++comp_faces[comp_of[f.corners.front().first]];
        for (int k = 0; k < graph_components_; ++k)
            if (comp_faces[k] != comp_crossings[k] + 2)
                throw std::invalid_argument("PD code is not planar: face census " +
                                            std::to_string(comp_faces[k]) + " != " +
                                            std::to_string(comp_crossings[k] + 2));
    }
    // each crossing-free circle bounds one additional region; with no
    // crossings at all the outer region is also unaccounted for
    int extra = free_loops_ + (n == 0 && free_loops_ > 0 ? 1 : 0);
    for (int k = 0; k < extra; ++k) faces_.emplace_back();
}

std::string Diagram::pd_text() const {
    std::ostringstream os;
    bool first = true;
    for (const Crossing& c : crossings_) {
        if (!first) os << ' ';
        first = false;
        os << "X[" << c.e[0] << ',' << c.e[1] << ',' << c.e[2] << ',' << c.e[3] << ']';
    }
    for (int k = 0; k < free_loops_; ++k) {
        if (!first) os << ' ';
        first = false;
        os << 'U';
    }
    return os.str();
}

bool Diagram::is_split() const {
    int pieces = graph_components_ + free_loops_;
    return pieces >= 2;
}

bool Diagram::incoming(int crossing, int port) const {
    return incoming_.at(crossing).at(port);
}

int Diagram::crossing_sign(int crossing) const { return sign_.at(crossing); }

int Diagram::writhe() const { return std::accumulate(sign_.begin(), sign_.end(), 0); }

int Diagram::face_at(int crossing, int quadrant) const {
    return corner_face_.at(crossing).at(quadrant);
}

std::pair<int, int> Diagram::edge_faces(int edge) const {
    auto [d1, d2] = edge_ends(edge);
    // the corner at quadrant q shares its face with the departure dart at port q
    return {corner_face_[d1.crossing][d1.port], corner_face_[d2.crossing][d2.port]};
}

std::vector<int> Diagram::edge_ids() const {
    std::vector<int> ids = edge_id_of_index_;
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::pair<Dart, Dart> Diagram::edge_ends(int edge) const {
    auto it = edge_index_of_id_.find(edge);
    if (it == edge_index_of_id_.end())
        throw std::invalid_argument("no edge labelled " + std::to_string(edge));
    return ends_[it->second];
}

bool Diagram::edge_good(int edge) const {
    auto [d1, d2] = edge_ends(edge);
    return (d1.port + d2.port) % 2 == 1;
}

Diagram Diagram::mirrored() const {
    std::vector<Crossing> out;
    out.reserve(crossings_.size());
    for (int c = 0; c < crossing_count(); ++c) {
        const auto& e = crossings_[c].e;
        if (sign_[c] > 0)
            out.push_back({{e[3], e[0], e[1], e[2]}});
        else
            out.push_back({{e[1], e[2], e[3], e[0]}});
    }
    return from_crossings(std::move(out), free_loops_);
}

Diagram Diagram::switched(int crossing) const {
    std::vector<Crossing> out = crossings_;
    const auto& e = crossings_.at(crossing).e;
    if (sign_[crossing] > 0)
        out[crossing] = {{e[3], e[0], e[1], e[2]}};
    else
        out[crossing] = {{e[1], e[2], e[3], e[0]}};
    return from_crossings(std::move(out), free_loops_);
}

Diagram Diagram::smoothed(int crossing) const {
    const auto& e = crossings_.at(crossing).e;
    // connect head to tail along the orientation
    std::array<std::pair<int, int>, 2> joins;
    if (sign_[crossing] > 0)
        joins = {{{e[0], e[1]}, {e[3], e[2]}}};
    else
        joins = {{{e[0], e[3]}, {e[1], e[2]}}};

    // union by edge label; a join whose ends already belong to one arc closes
    // a circle that no remaining crossing touches
    std::unordered_map<int, int> parent;
    auto find = [&](int a) {
        while (true) {
            auto it = parent.find(a);
            if (it == parent.end() || it->second == a) return a;
            a = it->second;
        }
    };
    int closed = 0;
    for (auto [a, b] : joins) {
        int ra = find(a), rb = find(b);
        if (ra == rb)
            ++closed;
        else
            parent[rb] = ra;
    }
    std::vector<Crossing> out;
    out.reserve(crossings_.size() - 1);
    for (int c = 0; c < crossing_count(); ++c) {
        if (c == crossing) continue;
        Crossing nc = crossings_[c];
        for (int p = 0; p < 4; ++p) nc.e[p] = find(nc.e[p]);
        out.push_back(nc);
    }
    return from_crossings(std::move(out), free_loops_ + closed);
}

std::string Diagram::canonical_key() const {
    // relabel along each strand component, seeded at the smallest original
    // label; the sorted tuple list then identifies the diagram regardless of
    // input edge names or crossing order
    std::unordered_map<int, int> relabel;
    relabel.reserve(ends_.size());
    std::vector<int> ids = edge_ids();
    int next = 1;
    for (int seed : ids) {
        if (relabel.count(seed)) continue;
        int e = seed;
        do {
            relabel[e] = next++;
            auto [d1, d2] = edge_ends(e);
            const Dart& head = incoming(d1.crossing, d1.port) ? d1 : d2;
            e = crossings_[head.crossing].e[(head.port + 2) % 4];
        } while (e != seed);
    }
    std::vector<std::array<int, 4>> tuples;
    tuples.reserve(crossings_.size());
    for (const Crossing& c : crossings_)
        tuples.push_back({relabel.at(c.e[0]), relabel.at(c.e[1]), relabel.at(c.e[2]), relabel.at(c.e[3])});
    std::sort(tuples.begin(), tuples.end());
    std::ostringstream os;
    for (const auto& t : tuples) os << 'X' << t[0] << ',' << t[1] << ',' << t[2] << ',' << t[3] << ';';
    os << '|' << free_loops_;
    return os.str();
}

namespace {

// removes crossings keep_out entirely, merging the given edge-label pairs;
// a pair whose labels already coincide closes a circle off the diagram
Diagram surgery(const Diagram& d, const std::vector<int>& drop,
                const std::vector<std::pair<int, int>>& joins) {
    std::unordered_map<int, int> parent;
    auto find = [&](int a) {
        while (true) {
            auto it = parent.find(a);
            if (it == parent.end() || it->second == a) return a;
            a = it->second;
        }
    };
    int closed = 0;
    for (auto [a, b] : joins) {
        int ra = find(a), rb = find(b);
        if (ra == rb)
            ++closed;
        else
            parent[rb] = ra;
    }
    std::vector<Crossing> out;
    for (int c = 0; c < d.crossing_count(); ++c) {
        if (std::find(drop.begin(), drop.end(), c) != drop.end()) continue;
        Crossing nc = d.crossings()[c];
        for (int p = 0; p < 4; ++p) nc.e[p] = find(nc.e[p]);
        out.push_back(nc);
    }
    return Diagram::from_crossings(std::move(out), d.free_loop_count() + closed);
}

}  // namespace

Diagram reidemeister_reduced(Diagram d) {
    bool changed = true;
    while (changed && d.crossing_count() > 0) {
        changed = false;
        // curls: an edge occupying two cyclically adjacent ports
        for (int c = 0; c < d.crossing_count() && !changed; ++c) {
            const auto& e = d.crossings()[c].e;
            for (int i = 0; i < 4 && !changed; ++i) {
                if (e[i] != e[(i + 1) % 4]) continue;
                d = surgery(d, {c}, {{e[(i + 2) % 4], e[(i + 3) % 4]}});
                changed = true;
            }
        }
        if (changed) continue;
        // two-corner regions where one strand runs over the other at both
        // ends; interleaved (clasp) regions stay
        for (const Face& f : d.faces()) {
            if (f.corners.size() != 2) continue;
            int c1 = f.corners[0].first, c2 = f.corners[1].first;
            int ea = f.edges[0], eb = f.edges[1];
            if (c1 == c2 || ea == eb) continue;
            auto parity = [&](int edge) {
                auto [x, y] = d.edge_ends(edge);
                if (x.port % 2 != y.port % 2) return -1;  // mixed
                return x.port % 2;
            };
            int pa = parity(ea), pb = parity(eb);
            if (pa == -1 || pb == -1 || pa == pb) continue;
            // continuation of each strand past the region, at both crossings
            auto continuation = [&](int edge, int at) {
                auto [x, y] = d.edge_ends(edge);
                const knotcert::Dart& end = x.crossing == at ? x : y;
                return d.crossings()[at].e[(end.port + 2) % 4];
            };
            d = surgery(d, {c1, c2},
                        {{continuation(ea, c1), continuation(ea, c2)},
                         {continuation(eb, c1), continuation(eb, c2)}});
            changed = true;
            break;
        }
    }
    return d;
}

MarkedDiagram::MarkedDiagram(Diagram d, int marked_edge) : d_(std::move(d)) {
    if (d_.crossing_count() == 0) throw std::invalid_argument("cannot mark an edge of a crossing-free diagram");
    std::vector<int> ids = d_.edge_ids();
    if (marked_edge < 0) {
        marked_edge_ = ids.front();
    } else {
        if (std::find(ids.begin(), ids.end(), marked_edge) == ids.end())
            throw std::invalid_argument("no edge labelled " + std::to_string(marked_edge));
        marked_edge_ = marked_edge;
    }
    auto [f1, f2] = d_.edge_faces(marked_edge_);
    if (f1 == f2)
        throw std::invalid_argument("marked edge must border two distinct regions");
    marked_faces_ = {f1, f2};
}

bool MarkedDiagram::face_marked(int face) const {
    return face == marked_faces_[0] || face == marked_faces_[1];
}

}  // namespace knotcert
