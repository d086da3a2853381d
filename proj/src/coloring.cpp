#include "webs/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace webs {

EdgeIncidence make_incidence(const Web& web) {
    const WebMap& m = web.map();
    EdgeIncidence inc;
    inc.n_vertices = m.vertex_count();
    inc.n_loops = m.loop_count();
    inc.at_vertex.resize(inc.n_vertices);
    for (int e = 0; e < m.edge_count(); ++e) {
        inc.ends.push_back({m.edges[e].source, m.edges[e].sink});
        inc.at_vertex[m.edges[e].source].push_back(e);
        inc.at_vertex[m.edges[e].sink].push_back(e);
    }
    return inc;
}

EdgeIncidence make_incidence(const CubicGraph& g) {
    EdgeIncidence inc;
    inc.n_vertices = g.n_vertices;
    inc.n_loops = 0;
    inc.at_vertex.resize(inc.n_vertices);
    for (int e = 0; e < g.edge_count(); ++e) {
        inc.ends.push_back(g.edges[e]);
        inc.at_vertex[g.edges[e][0]].push_back(e);
        inc.at_vertex[g.edges[e][1]].push_back(e);
    }
    return inc;
}

bool is_proper(const EdgeIncidence& inc, const Coloring& c) {
    if (c.edge.size() != inc.ends.size()) return false;
    if (static_cast<int>(c.loop.size()) != inc.n_loops) return false;
    for (const auto& edges : inc.at_vertex)
        for (size_t i = 0; i < edges.size(); ++i)
            for (size_t j = i + 1; j < edges.size(); ++j)
                if (c.edge[edges[i]] == c.edge[edges[j]]) return false;
    return true;
}

namespace {

void enumerate_rec(const EdgeIncidence& inc, int e, std::vector<int>& used_mask, Coloring& cur,
                   std::vector<Coloring>& out) {
    int n_edges = static_cast<int>(inc.ends.size());
    if (e == n_edges) {
        // loops take all three colors independently, lexicographically
        std::vector<Color>& lc = cur.loop;
        int n_loops = inc.n_loops;
        lc.assign(n_loops, Color::Red);
        if (n_loops == 0) {
            out.push_back(cur);
            return;
        }
        while (true) {
            out.push_back(cur);
            int i = n_loops - 1;
            while (i >= 0 && lc[i] == Color::Blue) {
                lc[i] = Color::Red;
                --i;
            }
            if (i < 0) break;
            lc[i] = static_cast<Color>(static_cast<int>(lc[i]) + 1);
        }
        return;
    }
    int u = inc.ends[e][0], v = inc.ends[e][1];
    for (Color col : kColors) {
        int bit = 1 << static_cast<int>(col);
        if ((used_mask[u] & bit) || (used_mask[v] & bit)) continue;
        used_mask[u] |= bit;
        used_mask[v] |= bit;
        cur.edge[e] = col;
        enumerate_rec(inc, e + 1, used_mask, cur, out);
        used_mask[u] &= ~bit;
        used_mask[v] &= ~bit;
    }
}

} // namespace

std::vector<Coloring> enumerate_colorings(const EdgeIncidence& inc) {
    std::vector<Coloring> out;
    Coloring cur;
    cur.edge.assign(inc.ends.size(), Color::Red);
    std::vector<int> used_mask(inc.n_vertices, 0);
    enumerate_rec(inc, 0, used_mask, cur, out);
    return out;
}

std::vector<Coloring> enumerate_colorings(const Web& web) {
    return enumerate_colorings(make_incidence(web));
}

std::vector<Coloring> enumerate_colorings(const CubicGraph& graph) {
    return enumerate_colorings(make_incidence(graph));
}

Configuration configuration(const Web& web, const Coloring& c, Color removed) {
    const WebMap& m = web.map();
    auto [small, large] = other_colors(removed);
    Configuration cfg;
    cfg.removed = removed;

    // Vertexless loops: a loop keeps its winding when colored with the
    // smaller remaining color and is reversed when colored with the greater.
    for (int l = 0; l < m.loop_count(); ++l) {
        if (c.loop[l] == removed) continue;
        ConfigCycle cyc;
        cyc.loop = l;
        cyc.sense = web.loop_orientation(l, c.loop[l] == small);
        cfg.cycles.push_back(std::move(cyc));
    }

    std::vector<char> seen(m.edge_count(), 0);
    for (int e0 = 0; e0 < m.edge_count(); ++e0) {
        if (seen[e0] || c.edge[e0] == removed) continue;
        ConfigCycle cyc;
        DartId start = c.edge[e0] == small ? tail_dart(e0) : head_dart(e0);
        DartId d = start;
        do {
            int e = dart_edge(d);
            seen[e] = 1;
            cyc.walk.push_back(d);
            cyc.edges.push_back(e);
            int v = m.dart_tip(d);
            int next_edge = -1;
            for (DartId dd : m.rotations[v]) {
                int ee = dart_edge(dd);
                if (ee != e && c.edge[ee] != removed) next_edge = ee;
            }
            assert(next_edge >= 0);
            d = c.edge[next_edge] == small ? tail_dart(next_edge) : head_dart(next_edge);
            assert(m.dart_base(d) == v);
        } while (d != start);
        cyc.sense = web.cycle_orientation(cyc.walk);
        cfg.cycles.push_back(std::move(cyc));
    }
    return cfg;
}

int config_degree(const Configuration& d) {
    int s = 0;
    for (const auto& cyc : d.cycles) s += sense_sign(cyc.sense);
    return s;
}

int total_degree(const Web& web, const Coloring& c) {
    int s = 0;
    for (Color u : kColors) s += config_degree(configuration(web, c, u));
    return s;
}

LaurentPoly bracket_enum(const Web& web) {
    LaurentPoly p;
    for (const Coloring& c : enumerate_colorings(web)) p.add_term(total_degree(web, c), 1);
    return p;
}

std::string coloring_str(const WebMap& map, const Coloring& c) {
    std::ostringstream os;
    for (size_t e = 0; e < c.edge.size(); ++e) {
        if (e) os << ' ';
        os << map.edge_names[e] << '=' << color_letter(c.edge[e]);
    }
    if (!c.loop.empty()) {
        os << " /";
        for (size_t l = 0; l < c.loop.size(); ++l)
            os << ' ' << map.loop_names[l] << '=' << color_letter(c.loop[l]);
    }
    return os.str();
}

std::string coloring_str(const CubicGraph& graph, const Coloring& c) {
    std::ostringstream os;
    for (size_t e = 0; e < c.edge.size(); ++e) {
        if (e) os << ' ';
        os << graph.edge_names[e] << '=' << color_letter(c.edge[e]);
    }
    return os.str();
}

} // namespace webs
