#pragma once

#include <vector>

#include "webs/coloring.hpp"
#include "webs/cubic_graph.hpp"
#include "webs/web_map.hpp"

namespace webs {

// One connected component of the subgraph left after removing the color
// `removed`; alternates the two remaining colors (a single color only for a
// vertexless loop).
struct BicoloredCycle {
    Color removed;
    std::vector<int> edges; // empty for a loop cycle
    int loop = -1;
};

std::vector<BicoloredCycle> bicolored_cycles(const EdgeIncidence& inc, const Coloring& c,
                                             Color removed);
std::vector<BicoloredCycle> bicolored_cycles(const Web& web, const Coloring& c, Color removed);
std::vector<BicoloredCycle> bicolored_cycles(const CubicGraph& g, const Coloring& c, Color removed);

// Swap the two colors other than cycle.removed along the cycle. Involution.
Coloring tau(const Coloring& c, const BicoloredCycle& cycle);

// Plane orientation of a bicolored cycle under the greater-color reversal
// rule. Web mode only.
CycleSense bicolored_orientation(const Web& web, const Coloring& c, const BicoloredCycle& cycle);

// total_degree(tau(c)) - total_degree(c). Defined for removed != green;
// throws GreenSwapUnsupported otherwise.
int delta_dt(const Web& web, const Coloring& c, const BicoloredCycle& cycle);

enum class KempeMode { Weak, Strong };

// Nodes are all proper colorings in enumeration order; edges are tau-moves.
// Strong mode only swaps along cycles missing red or blue.
struct KempeGraph {
    KempeMode mode;
    std::vector<Coloring> nodes;
    std::vector<std::pair<int, int>> edges; // i < j, deduplicated, sorted
};

KempeGraph kempe_graph(const Web& web, KempeMode mode);
KempeGraph kempe_graph(const CubicGraph& g, KempeMode mode);

std::vector<std::vector<int>> connected_components(const KempeGraph& g);

// For every pair of differently-colored attachment edges sitting on opposite
// strands of the square (either smoothing direction), confirms that no
// bicolored cycle contains both.
struct SquareEdgeCheck {
    int pairs_checked = 0;
    int violations = 0;
    bool confirmed() const { return violations == 0; }
};

SquareEdgeCheck check_square_edges(const Web& web, const Coloring& c, int face);

} // namespace webs
