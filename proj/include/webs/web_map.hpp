#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "webs/error.hpp"

namespace webs {

// Global color order: red < green < blue.
enum class Color : int { Red = 0, Green = 1, Blue = 2 };
enum class VertexRole : int { Sink, Source };
enum class Winding : int { CCW, CW };
enum class CycleSense : int { Positive, Negative };

inline constexpr std::array<Color, 3> kColors{Color::Red, Color::Green, Color::Blue};

const char* color_name(Color c);
char color_letter(Color c);
std::optional<Color> parse_color(const std::string& token);

// The two colors other than u, in increasing order.
std::pair<Color, Color> other_colors(Color u);

inline Winding flip(Winding w) { return w == Winding::CCW ? Winding::CW : Winding::CCW; }
inline CycleSense opposite(CycleSense s) {
    return s == CycleSense::Positive ? CycleSense::Negative : CycleSense::Positive;
}
inline int sense_sign(CycleSense s) { return s == CycleSense::Positive ? +1 : -1; }

// Darts: each edge owns two. The tail dart is based at the edge's source
// endpoint and points along the orientation; the head dart is based at the
// sink endpoint and points back.
using DartId = int;
constexpr DartId tail_dart(int edge) { return 2 * edge; }
constexpr DartId head_dart(int edge) { return 2 * edge + 1; }
constexpr int dart_edge(DartId d) { return d >> 1; }
constexpr bool dart_is_head(DartId d) { return d & 1; }
constexpr DartId dart_flip(DartId d) { return d ^ 1; } // the involution alpha

// Raw combinatorial-map data for a closed web: bipartite-oriented cubic
// multigraph with vertex rotations, plus vertexless loops and per-component
// outer-face marks. Mutable while being assembled; wrap in Web to use.
struct WebMap {
    struct Edge {
        int source = -1;
        int sink = -1;
    };

    std::string name = "web";
    std::vector<VertexRole> roles;
    std::vector<Edge> edges;
    std::vector<std::array<DartId, 3>> rotations; // per vertex, CCW order of darts based there
    std::vector<Winding> loops;
    std::vector<DartId> outer_marks; // one per dart-bearing component

    std::vector<std::string> vertex_names, edge_names, loop_names;

    int add_vertex(VertexRole role, std::string vname = "");
    int add_edge(int source, int sink, std::string ename = "");
    int add_loop(Winding w, std::string lname = "");
    void set_rotation(int v, DartId a, DartId b, DartId c);

    int vertex_count() const { return static_cast<int>(roles.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int loop_count() const { return static_cast<int>(loops.size()); }
    int dart_count() const { return 2 * edge_count(); }
    bool empty() const { return roles.empty() && loops.empty(); }

    int dart_base(DartId d) const {
        const Edge& e = edges[dart_edge(d)];
        return dart_is_head(d) ? e.sink : e.source;
    }
    int dart_tip(DartId d) const { return dart_base(dart_flip(d)); }
    std::string dart_name(DartId d) const {
        return edge_names[dart_edge(d)] + (dart_is_head(d) ? "h" : "t");
    }

    std::string fresh_edge_name();
    std::string fresh_loop_name();
};

struct Violation {
    std::string code;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

// Checks the closed-web axioms: 3-regularity, pure sink/source vertices, no
// self-loops, rotation consistency, per-component Euler identity F-E+V=2,
// and one outer mark per dart component.
ValidationReport validate_web(const WebMap& map);

struct ReducibleFeature {
    enum class Kind { Circle, Digon, Square };
    Kind kind;
    int index; // loop index for Circle, face index otherwise
};

// Geometry of a digon face: two parallel edges between a source and a sink
// corner, plus the attachment edge at each corner (equal in the theta case).
struct DigonGeometry {
    std::array<DartId, 2> face_darts;
    std::array<int, 2> edges;
    int source_corner = -1, sink_corner = -1;
    int source_attachment = -1, sink_attachment = -1; // edge ids
};

// Geometry of a square face in face-walk order. corners[i] carries sides[i]
// to corners[(i+1)%4]; attachments[i] is the third edge at corners[i].
struct SquareGeometry {
    std::array<DartId, 4> face_darts;
    std::array<int, 4> corners;
    std::array<int, 4> sides;       // edge ids
    std::array<int, 4> attachments; // edge ids, repeats possible
};

// A validated, immutable web with its face structure precomputed.
//
// Face orbits follow next(d) = sigma(alpha(d)); with CCW rotations this
// traces the face lying to the RIGHT of each dart, so the face to the left
// of d is face_of(alpha(d)). The convention is pinned by the fixture test
// against the coordinate signed-area oracle.
class Web {
public:
    explicit Web(WebMap map); // throws ValidationFailure

    const WebMap& map() const { return map_; }

    // Face orbits, sorted by smallest dart; id = position in this list.
    const std::vector<std::vector<DartId>>& faces() const { return faces_; }
    int face_of(DartId d) const { return dart_face_[d]; }
    int left_face(DartId d) const { return dart_face_[dart_flip(d)]; }
    // Orbit faces plus the two sides of every vertexless loop.
    int total_face_count() const { return static_cast<int>(faces_.size()) + 2 * map_.loop_count(); }

    int component_count() const { return comp_count_; }
    int component_of_vertex(int v) const { return vertex_comp_[v]; }
    int component_of_dart(DartId d) const { return vertex_comp_[map_.dart_base(d)]; }
    int outer_face_of_component(int comp) const { return comp_outer_face_[comp]; }

    DartId sigma_next(DartId d) const { return sigma_next_[d]; }
    DartId face_next(DartId d) const { return sigma_next_[dart_flip(d)]; }

    // Orientation of a directed simple closed walk given as darts, each
    // traversed base -> tip. Positive = counterclockwise in the plane.
    CycleSense cycle_orientation(const std::vector<DartId>& walk) const;
    CycleSense loop_orientation(int loop, bool along) const;

    // Smallest circle, else smallest digon face, else smallest square face.
    // Pass an rng to randomize the pick across all reducible features.
    ReducibleFeature find_reducible(std::mt19937_64* rng = nullptr) const;

    DigonGeometry digon_geometry(int face) const;   // throws NotADigon
    SquareGeometry square_geometry(int face) const; // throws NotASquare / DegenerateSquare

private:
    WebMap map_;
    std::vector<DartId> sigma_next_;
    std::vector<std::vector<DartId>> faces_;
    std::vector<int> dart_face_;
    std::vector<int> vertex_comp_;
    std::vector<int> comp_outer_face_;
    int comp_count_ = 0;
};

WebMap mirror(const WebMap& map);
WebMap disjoint_union(const WebMap& a, const WebMap& b);

// Connected dart-bearing components as stand-alone webs, then one web per
// vertexless loop. Nesting is not recorded, so order carries no geometry.
std::vector<WebMap> split_components(const Web& web);

// Relabeling-invariant encoding (BFS over darts, minimized over start darts;
// includes roles, windings and outer-face marks). Not a planarity-preserving
// normal form across reflections: mirror images encode differently.
std::string canonical_encoding(const WebMap& map);
uint64_t structural_hash(const WebMap& map); // FNV-1a of canonical_encoding

} // namespace webs
