#include "webs/web_map.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

namespace webs {

const char* color_name(Color c) {
    switch (c) {
        case Color::Red: return "red";
        case Color::Green: return "green";
        default: return "blue";
    }
}

char color_letter(Color c) {
    switch (c) {
        case Color::Red: return 'r';
        case Color::Green: return 'g';
        default: return 'b';
    }
}

std::optional<Color> parse_color(const std::string& token) {
    if (token == "r" || token == "red") return Color::Red;
    if (token == "g" || token == "green") return Color::Green;
    if (token == "b" || token == "blue") return Color::Blue;
    return std::nullopt;
}

std::pair<Color, Color> other_colors(Color u) {
    switch (u) {
        case Color::Red: return {Color::Green, Color::Blue};
        case Color::Green: return {Color::Red, Color::Blue};
        default: return {Color::Red, Color::Green};
    }
}

int WebMap::add_vertex(VertexRole role, std::string vname) {
    int id = vertex_count();
    roles.push_back(role);
    rotations.push_back({-1, -1, -1});
    vertex_names.push_back(vname.empty() ? "v" + std::to_string(id) : std::move(vname));
    return id;
}

int WebMap::add_edge(int source, int sink, std::string ename) {
    int id = edge_count();
    edges.push_back({source, sink});
    edge_names.push_back(ename.empty() ? "e" + std::to_string(id) : std::move(ename));
    return id;
}

int WebMap::add_loop(Winding w, std::string lname) {
    int id = loop_count();
    loops.push_back(w);
    loop_names.push_back(lname.empty() ? "l" + std::to_string(id) : std::move(lname));
    return id;
}

void WebMap::set_rotation(int v, DartId a, DartId b, DartId c) {
    rotations[v] = {a, b, c};
}

std::string WebMap::fresh_edge_name() {
    std::set<std::string> used(edge_names.begin(), edge_names.end());
    for (int k = 0;; ++k) {
        std::string cand = "s" + std::to_string(k);
        if (!used.count(cand)) return cand;
    }
}

std::string WebMap::fresh_loop_name() {
    std::set<std::string> used(loop_names.begin(), loop_names.end());
    for (int k = 0;; ++k) {
        std::string cand = "c" + std::to_string(k);
        if (!used.count(cand)) return cand;
    }
}

std::string ValidationReport::str() const {
    if (ok()) return "valid";
    std::ostringstream os;
    for (size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i].code << ": " << violations[i].detail;
    }
    return os.str();
}

namespace {

// sigma-successor table from the rotation lists; rotations must be complete.
std::vector<DartId> build_sigma_next(const WebMap& m) {
    std::vector<DartId> nxt(m.dart_count(), -1);
    for (int v = 0; v < m.vertex_count(); ++v) {
        const auto& rot = m.rotations[v];
        for (int i = 0; i < 3; ++i) nxt[rot[i]] = rot[(i + 1) % 3];
    }
    return nxt;
}

std::vector<std::vector<DartId>> face_orbits(const WebMap& m, const std::vector<DartId>& sigma_next) {
    std::vector<char> seen(m.dart_count(), 0);
    std::vector<std::vector<DartId>> orbits;
    for (DartId d0 = 0; d0 < m.dart_count(); ++d0) {
        if (seen[d0]) continue;
        std::vector<DartId> orbit;
        DartId d = d0;
        do {
            seen[d] = 1;
            orbit.push_back(d);
            d = sigma_next[dart_flip(d)];
        } while (d != d0);
        // rotate so the smallest dart comes first
        auto it = std::min_element(orbit.begin(), orbit.end());
        std::rotate(orbit.begin(), it, orbit.end());
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return orbits;
}

std::vector<int> vertex_components(const WebMap& m, int* count_out) {
    std::vector<int> comp(m.vertex_count(), -1);
    int count = 0;
    for (int v0 = 0; v0 < m.vertex_count(); ++v0) {
        if (comp[v0] >= 0) continue;
        std::vector<int> stack{v0};
        comp[v0] = count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (DartId d : m.rotations[v]) {
                int w = m.dart_tip(d);
                if (comp[w] < 0) {
                    comp[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    if (count_out) *count_out = count;
    return comp;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

ValidationReport validate_web(const WebMap& m) {
    ValidationReport rep;
    auto add = [&](const std::string& code, const std::string& detail) {
        rep.violations.push_back({code, detail});
    };

    bool structure_ok = true;
    for (int e = 0; e < m.edge_count(); ++e) {
        const auto& ed = m.edges[e];
        if (ed.source < 0 || ed.source >= m.vertex_count() || ed.sink < 0 ||
            ed.sink >= m.vertex_count()) {
            add("DanglingDart", "edge " + m.edge_names[e] + " has an endpoint out of range");
            structure_ok = false;
        }
    }
    if (!structure_ok) return rep;

    for (int e = 0; e < m.edge_count(); ++e) {
        if (m.edges[e].source == m.edges[e].sink)
            add("SelfLoop", "edge " + m.edge_names[e] + " joins a vertex to itself");
    }

    for (int e = 0; e < m.edge_count(); ++e) {
        const auto& ed = m.edges[e];
        if (ed.source == ed.sink) continue;
        if (m.roles[ed.source] != VertexRole::Source)
            add("MixedVertexOrientation",
                "edge " + m.edge_names[e] + " leaves sink vertex " + m.vertex_names[ed.source]);
        if (m.roles[ed.sink] != VertexRole::Sink)
            add("MixedVertexOrientation",
                "edge " + m.edge_names[e] + " enters source vertex " + m.vertex_names[ed.sink]);
    }

    std::vector<std::vector<DartId>> incident(m.vertex_count());
    for (int e = 0; e < m.edge_count(); ++e) {
        incident[m.edges[e].source].push_back(tail_dart(e));
        incident[m.edges[e].sink].push_back(head_dart(e));
    }
    bool rotations_ok = true;
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (incident[v].size() != 3) {
            add("NotCubic", "vertex " + m.vertex_names[v] + " has degree " +
                                std::to_string(incident[v].size()));
            rotations_ok = false;
            continue;
        }
        std::array<DartId, 3> rot = m.rotations[v];
        std::vector<DartId> sorted_rot(rot.begin(), rot.end());
        std::sort(sorted_rot.begin(), sorted_rot.end());
        std::vector<DartId> sorted_inc = incident[v];
        std::sort(sorted_inc.begin(), sorted_inc.end());
        if (sorted_rot != sorted_inc) {
            add("DanglingDart",
                "rotation at " + m.vertex_names[v] + " does not list its three incident darts");
            rotations_ok = false;
        }
    }
    if (!rotations_ok || !rep.ok()) return rep;

    auto sigma_next = build_sigma_next(m);
    auto orbits = face_orbits(m, sigma_next);
    int comp_count = 0;
    auto vcomp = vertex_components(m, &comp_count);

    std::vector<int> comp_v(comp_count, 0), comp_e(comp_count, 0), comp_f(comp_count, 0);
    for (int v = 0; v < m.vertex_count(); ++v) comp_v[vcomp[v]]++;
    for (int e = 0; e < m.edge_count(); ++e) comp_e[vcomp[m.edges[e].source]]++;
    for (const auto& orbit : orbits) {
        comp_f[vcomp[m.dart_base(orbit.front())]]++;
        if (orbit.size() % 2 != 0)
            add("EulerViolation", "face of odd size " + std::to_string(orbit.size()));
    }
    for (int c = 0; c < comp_count; ++c) {
        int chi = comp_f[c] - comp_e[c] + comp_v[c];
        if (chi != 2)
            add("EulerViolation", "component " + std::to_string(c) + " has F-E+V = " +
                                      std::to_string(chi) + ", expected 2");
    }

    std::vector<int> marks_per_comp(comp_count, 0);
    for (DartId d : m.outer_marks) {
        if (d < 0 || d >= m.dart_count()) {
            add("MissingOuter", "outer mark refers to a nonexistent dart");
            continue;
        }
        marks_per_comp[vcomp[m.dart_base(d)]]++;
    }
    for (int c = 0; c < comp_count; ++c) {
        if (marks_per_comp[c] == 0)
            add("MissingOuter", "component " + std::to_string(c) + " has no outer mark");
        else if (marks_per_comp[c] > 1)
            add("MissingOuter", "component " + std::to_string(c) + " has several outer marks");
    }
    return rep;
}

Web::Web(WebMap map) : map_(std::move(map)) {
    ValidationReport rep = validate_web(map_);
    if (!rep.ok()) throw Error("ValidationFailure", rep.str());

    sigma_next_ = build_sigma_next(map_);
    faces_ = face_orbits(map_, sigma_next_);
    dart_face_.assign(map_.dart_count(), -1);
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f)
        for (DartId d : faces_[f]) dart_face_[d] = f;
    vertex_comp_ = vertex_components(map_, &comp_count_);
    comp_outer_face_.assign(comp_count_, -1);
    for (DartId d : map_.outer_marks) comp_outer_face_[component_of_dart(d)] = face_of(d);
}

CycleSense Web::loop_orientation(int loop, bool along) const {
    Winding w = map_.loops[loop];
    if (!along) w = flip(w);
    return w == Winding::CCW ? CycleSense::Positive : CycleSense::Negative;
}

CycleSense Web::cycle_orientation(const std::vector<DartId>& walk) const {
    if (walk.empty()) throw Error("NotSimpleCycle", "empty walk");
    std::set<int> bases;
    for (size_t i = 0; i < walk.size(); ++i) {
        DartId d = walk[i];
        if (d < 0 || d >= map_.dart_count()) throw Error("NotSimpleCycle", "dart out of range");
        DartId nxt = walk[(i + 1) % walk.size()];
        if (map_.dart_tip(d) != map_.dart_base(nxt))
            throw Error("NotSimpleCycle", "walk is not connected end to end");
        if (!bases.insert(map_.dart_base(d)).second)
            throw Error("NotSimpleCycle", "walk repeats a vertex");
    }

    int comp = component_of_dart(walk.front());
    std::set<int> cycle_edges;
    for (DartId d : walk) cycle_edges.insert(dart_edge(d));

    UnionFind uf(static_cast<int>(faces_.size()));
    for (int e = 0; e < map_.edge_count(); ++e) {
        if (vertex_comp_[map_.edges[e].source] != comp) continue;
        if (cycle_edges.count(e)) continue;
        uf.unite(face_of(tail_dart(e)), face_of(head_dart(e)));
    }

    std::set<int> classes;
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f)
        if (vertex_comp_[map_.dart_base(faces_[f].front())] == comp) classes.insert(uf.find(f));
    if (classes.size() != 2)
        throw Error("CycleSeparationFailure",
                    "cycle does not split its component's faces into two regions");

    int left_class = uf.find(left_face(walk.front()));
    int right_class = uf.find(face_of(walk.front()));
    for (DartId d : walk) {
        if (uf.find(left_face(d)) != left_class || uf.find(face_of(d)) != right_class)
            throw Error("CycleSeparationFailure", "inconsistent face sides along the cycle");
    }
    if (left_class == right_class)
        throw Error("CycleSeparationFailure", "cycle has the same region on both sides");

    int outer_class = uf.find(comp_outer_face_[comp]);
    // Positive (counterclockwise) iff the bounded region lies on the left.
    return outer_class != left_class ? CycleSense::Positive : CycleSense::Negative;
}

ReducibleFeature Web::find_reducible(std::mt19937_64* rng) const {
    if (map_.empty()) throw Error("EmptyWeb", "the empty web has no reducible feature");
    if (rng) {
        std::vector<ReducibleFeature> all;
        for (int l = 0; l < map_.loop_count(); ++l)
            all.push_back({ReducibleFeature::Kind::Circle, l});
        for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
            if (faces_[f].size() == 2) all.push_back({ReducibleFeature::Kind::Digon, f});
            if (faces_[f].size() == 4) all.push_back({ReducibleFeature::Kind::Square, f});
        }
        if (all.empty()) throw Error("NoReducibleFeature", "no circle, digon or square found");
        return all[(*rng)() % all.size()];
    }
    if (map_.loop_count() > 0) return {ReducibleFeature::Kind::Circle, 0};
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f)
        if (faces_[f].size() == 2) return {ReducibleFeature::Kind::Digon, f};
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f)
        if (faces_[f].size() == 4) return {ReducibleFeature::Kind::Square, f};
    throw Error("NoReducibleFeature", "no circle, digon or square found");
}

DigonGeometry Web::digon_geometry(int face) const {
    if (face < 0 || face >= static_cast<int>(faces_.size()) || faces_[face].size() != 2)
        throw Error("NotADigon", "face is not a digon");
    DigonGeometry g;
    g.face_darts = {faces_[face][0], faces_[face][1]};
    g.edges = {dart_edge(g.face_darts[0]), dart_edge(g.face_darts[1])};
    assert(g.edges[0] != g.edges[1]);
    int va = map_.dart_base(g.face_darts[0]);
    int vb = map_.dart_base(g.face_darts[1]);
    g.source_corner = map_.roles[va] == VertexRole::Source ? va : vb;
    g.sink_corner = map_.roles[va] == VertexRole::Source ? vb : va;
    for (DartId d : map_.rotations[g.source_corner])
        if (dart_edge(d) != g.edges[0] && dart_edge(d) != g.edges[1]) g.source_attachment = dart_edge(d);
    for (DartId d : map_.rotations[g.sink_corner])
        if (dart_edge(d) != g.edges[0] && dart_edge(d) != g.edges[1]) g.sink_attachment = dart_edge(d);
    assert(g.source_attachment >= 0 && g.sink_attachment >= 0);
    return g;
}

SquareGeometry Web::square_geometry(int face) const {
    if (face < 0 || face >= static_cast<int>(faces_.size()) || faces_[face].size() != 4)
        throw Error("NotASquare", "face is not a square");
    SquareGeometry g;
    for (int i = 0; i < 4; ++i) g.face_darts[i] = faces_[face][i];
    for (int i = 0; i < 4; ++i) {
        g.corners[i] = map_.dart_base(g.face_darts[i]);
        g.sides[i] = dart_edge(g.face_darts[i]);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (g.corners[i] == g.corners[j])
                throw Error("DegenerateSquare", "square face revisits a corner vertex");
    for (int i = 0; i < 4; ++i) {
        DartId in_dart = dart_flip(g.face_darts[(i + 3) % 4]); // based at corners[i]
        for (DartId d : map_.rotations[g.corners[i]])
            if (d != g.face_darts[i] && d != in_dart) g.attachments[i] = dart_edge(d);
    }
    return g;
}

WebMap mirror(const WebMap& m) {
    WebMap r = m;
    for (auto& rot : r.rotations) std::swap(rot[0], rot[2]);
    for (auto& w : r.loops) w = flip(w);
    for (auto& d : r.outer_marks) d = dart_flip(d);
    return r;
}

WebMap disjoint_union(const WebMap& a, const WebMap& b) {
    WebMap r = a;
    r.name = a.name + "+" + b.name;
    int voff = a.vertex_count();
    int eoff = a.edge_count();
    int doff = 2 * eoff;

    std::set<std::string> vnames(a.vertex_names.begin(), a.vertex_names.end());
    std::set<std::string> enames(a.edge_names.begin(), a.edge_names.end());
    std::set<std::string> lnames(a.loop_names.begin(), a.loop_names.end());
    auto uniq = [](std::set<std::string>& used, std::string n) {
        while (used.count(n)) n += "'";
        used.insert(n);
        return n;
    };

    for (int v = 0; v < b.vertex_count(); ++v) {
        r.roles.push_back(b.roles[v]);
        r.vertex_names.push_back(uniq(vnames, b.vertex_names[v]));
        auto rot = b.rotations[v];
        for (auto& d : rot) d += doff;
        r.rotations.push_back(rot);
    }
    for (int e = 0; e < b.edge_count(); ++e) {
        r.edges.push_back({b.edges[e].source + voff, b.edges[e].sink + voff});
        r.edge_names.push_back(uniq(enames, b.edge_names[e]));
    }
    for (int l = 0; l < b.loop_count(); ++l) {
        r.loops.push_back(b.loops[l]);
        r.loop_names.push_back(uniq(lnames, b.loop_names[l]));
    }
    for (DartId d : b.outer_marks) r.outer_marks.push_back(d + doff);
    return r;
}

std::vector<WebMap> split_components(const Web& web) {
    const WebMap& m = web.map();
    std::vector<WebMap> out;
    for (int c = 0; c < web.component_count(); ++c) {
        WebMap sub;
        sub.name = m.name + "#" + std::to_string(c);
        std::vector<int> vmap(m.vertex_count(), -1), emap(m.edge_count(), -1);
        for (int v = 0; v < m.vertex_count(); ++v)
            if (web.component_of_vertex(v) == c) vmap[v] = sub.add_vertex(m.roles[v], m.vertex_names[v]);
        for (int e = 0; e < m.edge_count(); ++e)
            if (web.component_of_vertex(m.edges[e].source) == c)
                emap[e] = sub.add_edge(vmap[m.edges[e].source], vmap[m.edges[e].sink], m.edge_names[e]);
        auto remap = [&](DartId d) { return 2 * emap[dart_edge(d)] + (d & 1); };
        for (int v = 0; v < m.vertex_count(); ++v) {
            if (vmap[v] < 0) continue;
            const auto& rot = m.rotations[v];
            sub.set_rotation(vmap[v], remap(rot[0]), remap(rot[1]), remap(rot[2]));
        }
        for (DartId d : m.outer_marks)
            if (web.component_of_dart(d) == c) sub.outer_marks.push_back(remap(d));
        out.push_back(std::move(sub));
    }
    for (int l = 0; l < m.loop_count(); ++l) {
        WebMap sub;
        sub.name = m.name + "#loop" + std::to_string(l);
        sub.add_loop(m.loops[l], m.loop_names[l]);
        out.push_back(std::move(sub));
    }
    return out;
}

namespace {

std::string encode_component(const Web& web, const std::vector<DartId>& comp_darts) {
    const WebMap& m = web.map();
    std::string best;
    std::vector<int> label(m.dart_count(), -1);
    for (DartId start : comp_darts) {
        std::fill(label.begin(), label.end(), -1);
        std::vector<DartId> order;
        order.reserve(comp_darts.size());
        label[start] = 0;
        order.push_back(start);
        for (size_t i = 0; i < order.size(); ++i) {
            DartId d = order[i];
            for (DartId n : {web.sigma_next(d), dart_flip(d)}) {
                if (label[n] < 0) {
                    label[n] = static_cast<int>(order.size());
                    order.push_back(n);
                }
            }
        }
        std::ostringstream os;
        int outer = web.outer_face_of_component(web.component_of_dart(start));
        for (DartId d : order) {
            os << label[web.sigma_next(d)] << ',' << label[dart_flip(d)] << ','
               << (m.roles[m.dart_base(d)] == VertexRole::Source ? 1 : 0) << ','
               << (web.face_of(d) == outer ? 1 : 0) << ';';
        }
        std::string enc = os.str();
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

} // namespace

std::string canonical_encoding(const WebMap& map) {
    Web web{map};
    const WebMap& m = web.map();
    std::vector<std::vector<DartId>> comp_darts(web.component_count());
    for (DartId d = 0; d < m.dart_count(); ++d) comp_darts[web.component_of_dart(d)].push_back(d);
    std::vector<std::string> encodings;
    for (const auto& darts : comp_darts) encodings.push_back(encode_component(web, darts));
    std::sort(encodings.begin(), encodings.end());
    std::ostringstream os;
    for (const auto& e : encodings) os << "[" << e << "]";
    std::vector<Winding> ws = m.loops;
    std::sort(ws.begin(), ws.end(), [](Winding a, Winding b) { return static_cast<int>(a) < static_cast<int>(b); });
    for (Winding w : ws) os << (w == Winding::CCW ? "O+" : "O-");
    return os.str();
}

uint64_t structural_hash(const WebMap& map) {
    std::string enc = canonical_encoding(map);
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : enc) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace webs
