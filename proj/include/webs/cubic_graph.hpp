#pragma once

#include <string>
#include <vector>

#include "webs/web_map.hpp"

namespace webs {

// Abstract cubic multigraph: no embedding, no edge orientation. Carrier for
// the general-graph mode (dodecahedron, K3,3).
struct CubicGraph {
    std::string name = "graph";
    int n_vertices = 0;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::string> vertex_names, edge_names;

    int add_vertex(std::string vname = "") {
        int id = n_vertices++;
        vertex_names.push_back(vname.empty() ? "v" + std::to_string(id) : std::move(vname));
        return id;
    }
    int add_edge(int u, int v, std::string ename = "") {
        int id = static_cast<int>(edges.size());
        edges.push_back({u, v});
        edge_names.push_back(ename.empty() ? "e" + std::to_string(id) : std::move(ename));
        return id;
    }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

inline ValidationReport validate_cubic(const CubicGraph& g) {
    ValidationReport rep;
    std::vector<int> deg(g.n_vertices, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.edges[e][0] == g.edges[e][1]) {
            rep.violations.push_back({"SelfLoop", "edge " + g.edge_names[e] + " joins a vertex to itself"});
            continue;
        }
        deg[g.edges[e][0]]++;
        deg[g.edges[e][1]]++;
    }
    for (int v = 0; v < g.n_vertices; ++v)
        if (deg[v] != 3)
            rep.violations.push_back(
                {"NotCubic", "vertex " + g.vertex_names[v] + " has degree " + std::to_string(deg[v])});
    return rep;
}

} // namespace webs
