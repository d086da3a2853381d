#pragma once

#include <compare>
#include <string>
#include <vector>

#include "webs/cubic_graph.hpp"
#include "webs/laurent.hpp"
#include "webs/web_map.hpp"

namespace webs {

// Proper 3-edge-coloring: adjacent edges differ, loops colored freely.
struct Coloring {
    std::vector<Color> edge;
    std::vector<Color> loop;
    auto operator<=>(const Coloring&) const = default;
};

// Edge-vertex incidence shared by webs and plain cubic graphs.
struct EdgeIncidence {
    int n_vertices = 0;
    int n_loops = 0;
    std::vector<std::array<int, 2>> ends;     // edge -> endpoints
    std::vector<std::vector<int>> at_vertex;  // vertex -> incident edges
};

EdgeIncidence make_incidence(const Web& web);
EdgeIncidence make_incidence(const CubicGraph& graph);

bool is_proper(const EdgeIncidence& inc, const Coloring& c);

// Exhaustive and duplicate-free, in lexicographic order over
// (edge colors, loop colors) with red < green < blue.
std::vector<Coloring> enumerate_colorings(const EdgeIncidence& inc);
std::vector<Coloring> enumerate_colorings(const Web& web);
std::vector<Coloring> enumerate_colorings(const CubicGraph& graph);

// One oriented cycle of a two-colored configuration. For cycles through
// vertices `walk` holds the traversal darts (edges of the smaller color
// followed along their orientation, the greater color against); vertexless
// loops instead carry their loop index.
struct ConfigCycle {
    std::vector<DartId> walk;
    int loop = -1;
    CycleSense sense;
    std::vector<int> edges; // edge ids on the cycle (empty for loops)
};

// The 2-regular subgraph left after deleting the edges of color `removed`,
// split into oriented, signed cycles.
struct Configuration {
    Color removed;
    std::vector<ConfigCycle> cycles;
};

Configuration configuration(const Web& web, const Coloring& c, Color removed);
int config_degree(const Configuration& d); // positives minus negatives
int total_degree(const Web& web, const Coloring& c);

// Graded coloring count: sum over proper colorings of q^(total degree).
LaurentPoly bracket_enum(const Web& web);

std::string coloring_str(const WebMap& map, const Coloring& c);
std::string coloring_str(const CubicGraph& graph, const Coloring& c);

} // namespace webs
