#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace knotcert {

// One crossing: the four incident edge labels counterclockwise starting from
// the incoming under-strand edge.  Ports 0/2 are the under-strand (in/out),
// ports 1/3 carry the over-strand.
struct Crossing {
    std::array<int, 4> e;
};

// An edge endpoint: edge label attached at (crossing index, port).
struct Dart {
    int crossing = -1;
    int port = -1;
    bool operator==(const Dart& o) const = default;
};

// A complementary region of the diagram.  corners are (crossing, quadrant)
// pairs where quadrant q is the corner between ports q and q+1 mod 4;
// edges lists the boundary edge labels in traversal order.
struct Face {
    std::vector<std::pair<int, int>> corners;
    std::vector<int> edges;
};

// Planar link diagram in PD notation.  "X[a,b,c,d]" tuples plus optional "U"
// tokens for crossing-free unknot components.  Orientation is recovered from
// the incoming-under convention; construction validates that every edge label
// appears exactly twice, that orientations propagate consistently, and that
// the face census matches an embedding in the sphere.
class Diagram {
public:
    static Diagram parse_pd(const std::string& text);
    static Diagram from_crossings(std::vector<Crossing> crossings, int free_loops = 0);
    static Diagram unknot() { return from_crossings({}, 1); }

    std::string pd_text() const;

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int edge_count() const { return 2 * crossing_count(); }
    int free_loop_count() const { return free_loops_; }
    int component_count() const { return strand_components_ + free_loops_; }
    // connected components of the underlying 4-valent graph (free loops excluded)
    int graph_component_count() const { return graph_components_; }
    bool is_split() const;

    const std::vector<Crossing>& crossings() const { return crossings_; }

    // true when the edge at this port points into the crossing
    bool incoming(int crossing, int port) const;
    int crossing_sign(int crossing) const;  // +1 or -1
    int writhe() const;

    const std::vector<Face>& faces() const { return faces_; }
    int face_at(int crossing, int quadrant) const;  // face index owning that corner
    // the (at most two distinct) faces bordered by an edge
    std::pair<int, int> edge_faces(int edge) const;

    std::vector<int> edge_ids() const;  // sorted, distinct
    std::pair<Dart, Dart> edge_ends(int edge) const;
    // over at one endpoint and under at the other
    bool edge_good(int edge) const;

    Diagram mirrored() const;
    // over/under switch at one crossing (same underlying projection)
    Diagram switched(int crossing) const;
    // orientation-preserving smoothing at one crossing; closed circles that
    // detach in the process become free loops
    Diagram smoothed(int crossing) const;

    // canonical text: relabels edges by first traversal; equal canonical keys
    // identify diagrams that differ only by edge names or crossing order
    std::string canonical_key() const;

private:
    Diagram() = default;
    void validate_and_index();

    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
    int strand_components_ = 0;
    int graph_components_ = 0;
    std::vector<Face> faces_;
    std::vector<int> sign_;                       // per crossing
    std::vector<std::array<bool, 4>> incoming_;   // per crossing, per port
    std::vector<std::pair<Dart, Dart>> ends_;        // per edge slot (dense index)
    std::unordered_map<int, int> edge_index_of_id_;  // label -> dense index
    std::vector<int> edge_id_of_index_;
    std::vector<std::array<int, 4>> corner_face_;  // per crossing: face at quadrant
};

// Applies curl removals (one-corner regions) and parallel-strand pulls
// (two-corner regions whose strands do not interleave) until none remain.
// Preserves the link type, not the crossing data, so use it only where the
// quantity under computation is a link invariant.
Diagram reidemeister_reduced(Diagram d);

// Diagram plus a marked edge; the marked edge's two faces are the marked
// regions excluded from state assignments.
class MarkedDiagram {
public:
    // edge < 0 selects the default mark (lowest edge label)
    explicit MarkedDiagram(Diagram d, int marked_edge = -1);

    const Diagram& diagram() const { return d_; }
    int marked_edge() const { return marked_edge_; }
    const std::array<int, 2>& marked_faces() const { return marked_faces_; }
    bool face_marked(int face) const;

private:
    Diagram d_;
    int marked_edge_ = -1;
    std::array<int, 2> marked_faces_{-1, -1};
};

}  // namespace knotcert
