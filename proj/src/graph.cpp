#include "bcx/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "bcx/errors.hpp"

namespace bcx {

SimpleGraph::SimpleGraph(int l, std::vector<std::pair<int, int>> e)
    : vertices(l), edges(std::move(e)) {
    if (l < 1) throw invalid_input("graph needs at least one vertex");
    std::vector<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u < 1 || u > l || v < 1 || v > l)
            throw invalid_input("edge endpoint outside 1.." + std::to_string(l));
        if (u == v) throw invalid_input("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (std::find(seen.begin(), seen.end(), std::make_pair(u, v)) != seen.end())
            throw invalid_input("parallel edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        seen.emplace_back(u, v);
    }
    if (edge_count() > ElementSet::max_elements)
        throw invalid_input("more than 64 edges");
}

int SimpleGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int i = 0; i < edge_count(); ++i)
        if (edges[i] == std::make_pair(u, v)) return i + 1;
    return 0;
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
    std::vector<std::vector<int>> adj(vertices + 1);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

int SimpleGraph::component_count() const {
    std::vector<int> parent(vertices + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = vertices;
    for (auto [u, v] : edges) {
        int ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[ru] = rv;
            --comps;
        }
    }
    return comps;
}

bool SimpleGraph::connected() const { return component_count() == 1; }

std::vector<ElementSet> SimpleGraph::cycle_edge_sets() const {
    auto adj = adjacency();
    std::vector<ElementSet> cycles;
    std::vector<int> path;
    std::vector<bool> on_path(vertices + 1, false);

    // Each cycle is rooted at its smallest vertex; the direction duplicate is
    // killed by requiring path[1] < last vertex.
    auto dfs = [&](auto&& self, int root, int cur) -> void {
        for (int w : adj[cur]) {
            if (w == root && path.size() >= 3) {
                if (path[1] < path.back()) {
                    ElementSet c;
                    for (size_t i = 0; i + 1 < path.size(); ++i)
                        c.add(edge_index(path[i], path[i + 1]));
                    c.add(edge_index(path.back(), root));
                    cycles.push_back(c);
                }
            } else if (w > root && !on_path[w]) {
                path.push_back(w);
                on_path[w] = true;
                self(self, root, w);
                on_path[w] = false;
                path.pop_back();
            }
        }
    };

    for (int root = 1; root <= vertices; ++root) {
        path = {root};
        on_path.assign(vertices + 1, false);
        on_path[root] = true;
        dfs(dfs, root, root);
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

namespace {

// Degree sequence plus one refinement round; an isomorphism invariant used to
// cut down backtracking candidates.
std::vector<long long> vertex_keys(const SimpleGraph& g) {
    auto adj = g.adjacency();
    std::vector<long long> key(g.vertices + 1);
    for (int v = 1; v <= g.vertices; ++v) key[v] = static_cast<long long>(adj[v].size());
    std::vector<long long> next(g.vertices + 1);
    for (int round = 0; round < 2; ++round) {
        for (int v = 1; v <= g.vertices; ++v) {
            std::vector<long long> nb;
            for (int w : adj[v]) nb.push_back(key[w]);
            std::sort(nb.begin(), nb.end());
            long long h = key[v];
            for (long long x : nb) h = h * 1000003 + x + 1;
            next[v] = h;
        }
        key = next;
    }
    return key;
}

bool extend_mapping(const SimpleGraph& a, const SimpleGraph& b,
                    const std::vector<std::vector<bool>>& adj_a,
                    const std::vector<std::vector<bool>>& adj_b,
                    const std::vector<long long>& ka, const std::vector<long long>& kb,
                    std::vector<int>& map, std::vector<bool>& used, int v) {
    if (v > a.vertices) return true;
    for (int w = 1; w <= b.vertices; ++w) {
        if (used[w] || ka[v] != kb[w]) continue;
        bool ok = true;
        for (int u = 1; u < v && ok; ++u)
            if (adj_a[v][u] != adj_b[w][map[u]]) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (extend_mapping(a, b, adj_a, adj_b, ka, kb, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

std::vector<std::vector<bool>> adjacency_matrix(const SimpleGraph& g) {
    std::vector<std::vector<bool>> m(g.vertices + 1, std::vector<bool>(g.vertices + 1, false));
    for (auto [u, v] : g.edges) m[u][v] = m[v][u] = true;
    return m;
}

}  // namespace

bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.vertices != b.vertices || a.edge_count() != b.edge_count()) return false;
    auto ka = vertex_keys(a), kb = vertex_keys(b);
    auto sa = ka, sb = kb;
    std::sort(sa.begin() + 1, sa.end());
    std::sort(sb.begin() + 1, sb.end());
    if (sa != sb) return false;
    auto ma = adjacency_matrix(a), mb = adjacency_matrix(b);
    std::vector<int> map(a.vertices + 1, 0);
    std::vector<bool> used(b.vertices + 1, false);
    return extend_mapping(a, b, ma, mb, ka, kb, map, used, 1);
}

std::vector<SimpleGraph> connected_graphs_up_to(int max_edges) {
    std::vector<SimpleGraph> all;
    std::vector<SimpleGraph> level = {SimpleGraph(2, {{1, 2}})};
    all.push_back(level[0]);

    for (int m = 2; m <= max_edges; ++m) {
        std::vector<SimpleGraph> next;
        // Invariant key -> indices into next, to keep isomorphism tests cheap.
        std::map<std::vector<long long>, std::vector<size_t>> index;
        auto try_add = [&](SimpleGraph g) {
            auto key = vertex_keys(g);
            std::sort(key.begin() + 1, key.end());
            key[0] = g.vertices;
            auto& bucket = index[key];
            for (size_t i : bucket)
                if (graphs_isomorphic(next[i], g)) return;
            bucket.push_back(next.size());
            next.push_back(std::move(g));
        };
        for (const SimpleGraph& g : level) {
            // New edge between existing non-adjacent vertices.
            for (int u = 1; u <= g.vertices; ++u)
                for (int v = u + 1; v <= g.vertices; ++v)
                    if (!g.edge_index(u, v)) {
                        auto e = g.edges;
                        e.emplace_back(u, v);
                        try_add(SimpleGraph(g.vertices, std::move(e)));
                    }
            // Pendant vertex.
            for (int u = 1; u <= g.vertices; ++u) {
                auto e = g.edges;
                e.emplace_back(u, g.vertices + 1);
                try_add(SimpleGraph(g.vertices + 1, std::move(e)));
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

}  // namespace bcx
