#include "bcx/graph_apps.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "bcx/classification.hpp"
#include "bcx/errors.hpp"
#include "bcx/invariants.hpp"
#include "bcx/matroid.hpp"

namespace bcx {

std::vector<ElementSet> Triangulation::face_circuits() const {
    std::vector<ElementSet> out;
    for (const auto& f : faces) out.push_back(ElementSet{f[0], f[1], f[2]});
    return out;
}

namespace {

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

// Three edges forming a triangle have exactly three distinct endpoints.
bool is_triangle(const SimpleGraph& g, const std::array<int, 3>& f, std::string* why) {
    ElementSet idx{f[0], f[1], f[2]};
    if (idx.size() != 3) return fail(why, "face with repeated edges");
    ElementSet verts;
    for (int e : f) {
        if (e < 1 || e > g.edge_count()) return fail(why, "face edge index out of range");
        verts.add(g.edges[e - 1].first);
        verts.add(g.edges[e - 1].second);
    }
    if (verts.size() != 3) return fail(why, "face edges do not bound a triangle");
    return true;
}

// Dual adjacency as a multigraph: one edge per shared graph edge.
std::vector<std::pair<int, int>> dual_edges(const Triangulation& t) {
    std::vector<std::pair<int, int>> out;
    auto circuits = t.face_circuits();
    for (size_t i = 0; i < circuits.size(); ++i)
        for (size_t j = i + 1; j < circuits.size(); ++j)
            for (int k = 0; k < (circuits[i] & circuits[j]).size(); ++k)
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

bool multigraph_acyclic(int order, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<bool>& keep) {
    std::vector<int> parent(order);
    for (int i = 0; i < order; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edges) {
        if (!keep[a] || !keep[b]) continue;
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

bool dual_has_triangle(int order, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<bool>> adj(order, std::vector<bool>(order, false));
    for (auto [a, b] : edges) adj[a][b] = adj[b][a] = true;
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j)
            for (int k = j + 1; k < order; ++k)
                if (adj[i][j] && adj[j][k] && adj[i][k]) return true;
    return false;
}

}  // namespace

bool is_polygon_triangulation(const Triangulation& t, std::string* why) {
    int l = t.graph.vertices;
    if (l < 3) return fail(why, "polygon needs at least 3 vertices");
    if (t.graph.edge_count() != 2 * l - 3)
        return fail(why, "polygon triangulation must have 2l-3 edges");
    if (static_cast<int>(t.faces.size()) != l - 2)
        return fail(why, "polygon triangulation must list l-2 triangles");
    for (const auto& f : t.faces)
        if (!is_triangle(t.graph, f, why)) return false;
    if (static_cast<int>(t.outer.size()) != l)
        return fail(why, "outer boundary must list the l polygon edges");
    // The dual of the triangles must be a tree.
    auto ig = intersection_graph(t.face_circuits());
    if (!ig.is_tree) return fail(why, "dual graph of the triangles is not a tree");
    return true;
}

bool is_maximal_planar(const Triangulation& t, std::string* why) {
    int l = t.graph.vertices;
    if (l < 3) return fail(why, "maximal planar graph needs at least 3 vertices");
    if (t.graph.edge_count() != 3 * l - 6)
        return fail(why, "maximal planar graph must have 3l-6 edges");
    if (static_cast<int>(t.faces.size()) != 2 * l - 4)
        return fail(why, "maximal planar graph must list 2l-4 faces");
    for (const auto& f : t.faces)
        if (!is_triangle(t.graph, f, why)) return false;
    std::vector<int> edge_uses(t.graph.edge_count() + 1, 0);
    for (const auto& f : t.faces)
        for (int e : f) ++edge_uses[e];
    for (int e = 1; e <= t.graph.edge_count(); ++e)
        if (edge_uses[e] != 2) return fail(why, "edge " + std::to_string(e) + " not on two faces");
    // Cubic dual.
    auto de = dual_edges(t);
    std::vector<int> deg(t.faces.size(), 0);
    for (auto [a, b] : de) {
        ++deg[a];
        ++deg[b];
    }
    for (int d : deg)
        if (d != 3) return fail(why, "dual graph is not cubic");
    return true;
}

TriangulationAnalysis triangulation_analysis(const Triangulation& t) {
    std::string why;
    if (!is_polygon_triangulation(t, &why)) throw invalid_input("not a polygon triangulation: " + why);

    auto family = t.face_circuits();
    Ordering ord = ordering_from_family(family, t.graph.edge_count());
    Matroid m = Matroid::cycle_matroid(t.graph);

    TriangulationAnalysis out;
    out.ordering = ord;
    auto ci = complete_intersection_check(m, ord);
    if (!ci) throw internal_error("triangulation ordering is not a complete intersection");
    out.complete_intersection = true;
    out.degrees = ci->degrees;
    for (int q : out.degrees)
        if (q != 2) throw internal_error("triangulation degree above 2");

    ChromaticPair chromatic = chromatic_polynomials(t.graph, ord);
    if (!(chromatic.whitney == chromatic.delcon))
        throw internal_error("chromatic engines disagree on a triangulation");
    int l = t.graph.vertices;
    IntPolynomial expected = IntPolynomial({BigInt(0), BigInt(1)}) *
                             IntPolynomial({BigInt(-1), BigInt(1)}) *
                             IntPolynomial({BigInt(-2), BigInt(1)}).pow(l - 2);
    if (!(chromatic.whitney == expected))
        throw internal_error("triangulation chromatic polynomial off the closed form");
    out.chromatic = chromatic.whitney;
    return out;
}

namespace {

struct ForestSearch {
    std::vector<bool> best;
    int best_size = -1;

    void consider(const std::vector<bool>& keep, int size) {
        if (size > best_size) {
            best = keep;
            best_size = size;
        }
    }
};

// Exact maximum induced forest by subset scan; order <= 14 keeps this cheap.
std::vector<bool> max_induced_forest_exact(int order,
                                           const std::vector<std::pair<int, int>>& edges) {
    ForestSearch s;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << order); ++mask) {
        std::vector<bool> keep(order);
        int size = 0;
        for (int i = 0; i < order; ++i)
            if ((mask >> i) & 1) {
                keep[i] = true;
                ++size;
            }
        if (size <= s.best_size) continue;
        if (multigraph_acyclic(order, edges, keep)) s.consider(keep, size);
    }
    return s.best;
}

// Greedy fallback beyond the exact cap: drop highest-degree vertices until
// acyclic, then try to add vertices back.
std::vector<bool> max_induced_forest_greedy(int order,
                                            const std::vector<std::pair<int, int>>& edges) {
    std::vector<bool> keep(order, true);
    auto degree_in = [&](int v) {
        int d = 0;
        for (auto [a, b] : edges)
            if ((a == v && keep[b]) || (b == v && keep[a])) ++d;
        return d;
    };
    while (!multigraph_acyclic(order, edges, keep)) {
        int worst = -1, worst_deg = -1;
        for (int v = 0; v < order; ++v)
            if (keep[v] && degree_in(v) > worst_deg) {
                worst = v;
                worst_deg = degree_in(v);
            }
        keep[worst] = false;
    }
    for (int v = 0; v < order; ++v) {
        if (keep[v]) continue;
        keep[v] = true;
        if (!multigraph_acyclic(order, edges, keep)) keep[v] = false;
    }
    return keep;
}

}  // namespace

WilfOrdering wilf_ordering(const Triangulation& t) {
    std::string why;
    if (!is_maximal_planar(t, &why)) throw invalid_input("not maximal planar: " + why);
    int l = t.graph.vertices;
    int order = static_cast<int>(t.faces.size());
    auto de = dual_edges(t);

    WilfOrdering out;
    out.triangle_free_dual = !dual_has_triangle(order, de);
    out.exact_search = order <= 14;
    std::vector<bool> keep =
        out.exact_search ? max_induced_forest_exact(order, de) : max_induced_forest_greedy(order, de);

    auto circuits = t.face_circuits();
    for (int i = 0; i < order; ++i)
        if (keep[i]) out.forest.push_back(circuits[i]);

    out.ordering = ordering_from_family(out.forest, t.graph.edge_count());
    auto rep = simple_subset_analysis(out.forest, out.ordering);
    if (!rep.simple) throw internal_error("dual forest did not give disjoint broken circuits");
    out.count = static_cast<int>(out.forest.size());

    out.small_case = (l <= 4);
    if (out.small_case)
        out.bound = l - 2;
    else if (out.triangle_free_dual)
        out.bound = std::max(l - 2 + l / 4, l - 3 + (l + 2) / 3);
    else
        out.bound = l - 2 + l / 4;

    if (out.exact_search && out.count < out.bound)
        throw internal_error("disjoint broken circuits fall short of the proven bound");
    return out;
}

WilfReport wilf_report(const Triangulation& t) {
    std::string why;
    if (!is_maximal_planar(t, &why)) throw invalid_input("not maximal planar: " + why);
    int l = t.graph.vertices;
    int order = static_cast<int>(t.faces.size());
    WilfReport out;
    out.triangle_free_dual = !dual_has_triangle(order, dual_edges(t));

    ChromaticPair chromatic = chromatic_polynomials(t.graph, Ordering::natural(t.graph.edge_count()));
    if (!(chromatic.whitney == chromatic.delcon))
        throw internal_error("chromatic engines disagree");
    std::vector<BigInt> bounds = wilf_bound_coefficients(l, out.triangle_free_dual);

    out.all_dominated = true;
    for (int p = 1; p <= l - 1; ++p) {
        BigInt coeff = chromatic.whitney.coefficient(l - p);
        BigInt a = (p % 2 == 0) ? coeff : -coeff;
        WilfRow row{p, a, bounds[p - 1]};
        if (row.a > row.b) out.all_dominated = false;
        out.rows.push_back(std::move(row));
    }
    return out;
}

namespace {

Triangulation from_vertex_faces(SimpleGraph g, const std::vector<std::array<int, 3>>& vfaces,
                                std::vector<int> outer) {
    Triangulation t;
    t.faces.reserve(vfaces.size());
    for (const auto& f : vfaces) {
        std::array<int, 3> e = {g.edge_index(f[0], f[1]), g.edge_index(f[1], f[2]),
                                g.edge_index(f[0], f[2])};
        for (int x : e)
            if (x == 0) throw internal_error("face references a missing edge");
        t.faces.push_back(e);
    }
    t.graph = std::move(g);
    t.outer = std::move(outer);
    return t;
}

}  // namespace

Triangulation polygon_fan(int l) {
    if (l < 3) throw invalid_input("polygon needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < l; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, l);
    for (int k = 3; k < l; ++k) edges.emplace_back(1, k);  // fan diagonals
    SimpleGraph g(l, std::move(edges));
    std::vector<std::array<int, 3>> vfaces;
    for (int k = 2; k < l; ++k) vfaces.push_back({1, k, k + 1});
    std::vector<int> outer;
    for (int i = 1; i <= l; ++i) outer.push_back(i);
    return from_vertex_faces(std::move(g), vfaces, std::move(outer));
}

Triangulation polygon_random(int l, Rng& rng) {
    if (l < 3) throw invalid_input("polygon needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < l; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, l);
    std::vector<std::array<int, 3>> vfaces;
    // Random ear split of the chain i..j (a chord or boundary edge joins i,j).
    auto split = [&](auto&& self, int i, int j) -> void {
        if (j - i < 2) return;
        int k = i + 1 + static_cast<int>(rng_below(rng, j - i - 1));
        vfaces.push_back({i, k, j});
        if (k - i >= 2) edges.emplace_back(i, k);
        if (j - k >= 2) edges.emplace_back(k, j);
        self(self, i, k);
        self(self, k, j);
    };
    split(split, 1, l);
    SimpleGraph g(l, std::move(edges));
    std::vector<int> outer;
    for (int i = 1; i <= l; ++i) outer.push_back(i);
    return from_vertex_faces(std::move(g), vfaces, std::move(outer));
}

Triangulation tetrahedron() {
    SimpleGraph g(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    std::vector<std::array<int, 3>> vfaces = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    return from_vertex_faces(std::move(g), vfaces, {});
}

Triangulation octahedron() {
    // Vertex 1 on top, 6 on the bottom, square 2-3-4-5 around the middle.
    SimpleGraph g(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {2, 5},
                      {2, 6}, {3, 6}, {4, 6}, {5, 6}});
    std::vector<std::array<int, 3>> vfaces = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 2, 5},
                                              {2, 3, 6}, {3, 4, 6}, {4, 5, 6}, {2, 5, 6}};
    return from_vertex_faces(std::move(g), vfaces, {});
}

Triangulation icosahedron() {
    SimpleGraph g(12, {{1, 2},  {1, 3},  {1, 4},  {1, 5},  {1, 6},  {2, 3},  {3, 4},  {4, 5},
                       {5, 6},  {2, 6},  {2, 7},  {3, 7},  {3, 8},  {4, 8},  {4, 9},  {5, 9},
                       {5, 10}, {6, 10}, {6, 11}, {2, 11}, {7, 8},  {8, 9},  {9, 10}, {10, 11},
                       {7, 11}, {7, 12}, {8, 12}, {9, 12}, {10, 12}, {11, 12}});
    std::vector<std::array<int, 3>> vfaces = {
        {1, 2, 3},  {1, 3, 4},  {1, 4, 5},   {1, 5, 6},   {1, 2, 6},   {2, 3, 7},  {3, 7, 8},
        {3, 4, 8},  {4, 8, 9},  {4, 5, 9},   {5, 9, 10},  {5, 6, 10},  {6, 10, 11}, {2, 6, 11},
        {2, 7, 11}, {7, 8, 12}, {8, 9, 12},  {9, 10, 12}, {10, 11, 12}, {7, 11, 12}};
    return from_vertex_faces(std::move(g), vfaces, {});
}

}  // namespace bcx
