#include "bcx/broken_circuit.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "bcx/errors.hpp"

namespace bcx {

BrokenCircuits minimal_broken_circuits(const Matroid& m, const Ordering& ord) {
    if (ord.n() != m.n()) throw invalid_input("ordering size differs from ground set");
    BrokenCircuits out;
    for (const auto& c : m.circuits())
        out.by_circuit.emplace_back(c, c - ElementSet::single(ord.min_of(c)));

    std::vector<ElementSet> bcs;
    for (const auto& [c, bc] : out.by_circuit) bcs.push_back(bc);
    std::sort(bcs.begin(), bcs.end());
    bcs.erase(std::unique(bcs.begin(), bcs.end()), bcs.end());
    for (const auto& b : bcs) {
        bool min = true;
        for (const auto& other : bcs)
            if (other != b && other.subset_of(b)) {
                min = false;
                break;
            }
        if (min) out.minimal.push_back(b);
    }
    return out;
}

MonomialIdeal stanley_reisner_ideal(const Matroid& m, const Ordering& ord) {
    auto bc = minimal_broken_circuits(m, ord);
    std::vector<Monomial> gens;
    for (const auto& b : bc.minimal) gens.push_back(Monomial::squarefree(m.n(), b));
    return MonomialIdeal(m.n(), std::move(gens));
}

bool is_generating_family(const Matroid& m, const Ordering& ord,
                          const std::vector<ElementSet>& family) {
    auto bc = minimal_broken_circuits(m, ord);
    std::vector<ElementSet> family_bcs;
    for (const auto& c : family) {
        if (!m.is_circuit(c)) throw invalid_input("family member is not a circuit");
        family_bcs.push_back(c - ElementSet::single(ord.min_of(c)));
    }
    for (const auto& b : bc.minimal)
        if (std::find(family_bcs.begin(), family_bcs.end(), b) == family_bcs.end()) return false;
    return true;
}

namespace {

std::vector<BigInt> h_from_f(const std::vector<BigInt>& f, int r) {
    std::vector<BigInt> h(r + 1, BigInt(0));
    for (int k = 0; k <= r; ++k) {
        BigInt v = 0;
        for (int i = 0; i <= k; ++i) {
            BigInt term = binomial(r - i, k - i) * f[i];
            v += ((k - i) % 2 == 0) ? term : -term;
        }
        h[k] = v;
        if (v < 0)
            throw internal_error("negative h-vector entry; shellability violated, likely a bug");
    }
    return h;
}

}  // namespace

FaceVectors face_vectors(const Matroid& m, const Ordering& ord, int dense_cap) {
    auto bc = minimal_broken_circuits(m, ord);
    int n = m.n(), r = m.rank();
    std::vector<std::uint64_t> forbidden;
    for (const auto& b : bc.minimal) forbidden.push_back(b.mask());

    std::vector<BigInt> f(r + 1, BigInt(0));
    auto record = [&](int size) {
        if (size > r) throw internal_error("face larger than the matroid rank");
        f[size] += 1;
    };

    if (n <= dense_cap) {
        for (std::uint64_t mask = 0;; ++mask) {
            bool face = true;
            for (std::uint64_t b : forbidden)
                if ((b & ~mask) == 0) {
                    face = false;
                    break;
                }
            if (face) record(std::popcount(mask));
            if (mask == (n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1)) break;
        }
    } else {
        // Pruned walk: a forbidden set becomes contained exactly when its
        // largest element joins, so it is checked only there.
        std::vector<std::vector<std::uint64_t>> by_max(n + 1);
        for (const auto& b : bc.minimal) {
            auto v = b.to_vector();
            by_max[v.back()].push_back(b.mask());
        }
        auto walk = [&](auto&& self, std::uint64_t mask, int next, int size) -> void {
            record(size);
            for (int e = next; e <= n; ++e) {
                std::uint64_t cand = mask | (std::uint64_t(1) << (e - 1));
                bool ok = true;
                for (std::uint64_t b : by_max[e])
                    if ((b & ~cand) == 0) {
                        ok = false;
                        break;
                    }
                if (ok) self(self, cand, e + 1, size + 1);
            }
        };
        walk(walk, 0, 1, 0);
    }

    if (f[r] <= 0) throw internal_error("broken circuit complex has wrong dimension");
    FaceVectors fv;
    fv.f = std::move(f);
    fv.rank = r;
    fv.h = h_from_f(fv.f, r);
    return fv;
}

LabeledIntersectionGraph intersection_graph(const std::vector<ElementSet>& family) {
    LabeledIntersectionGraph g;
    g.order = static_cast<int>(family.size());
    for (int i = 0; i < g.order; ++i)
        for (int j = i + 1; j < g.order; ++j) {
            ElementSet common = family[i] & family[j];
            if (!common.empty()) {
                g.edges.emplace_back(i, j);
                g.labels.push_back(common);
            }
        }

    // Connectivity and acyclicity by union-find.
    std::vector<int> parent(g.order);
    for (int i = 0; i < g.order; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    bool acyclic = true;
    int comps = g.order;
    for (auto [a, b] : g.edges) {
        int ra = find(a), rb = find(b);
        if (ra == rb)
            acyclic = false;
        else {
            parent[ra] = rb;
            --comps;
        }
    }
    g.is_forest = acyclic;
    g.connected = (comps <= 1);
    g.is_tree = g.is_forest && g.connected;

    // Search for a cycle whose edge labels are pairwise distinct.
    std::vector<std::vector<std::pair<int, int>>> adj(g.order);  // (neighbor, edge idx)
    for (size_t e = 0; e < g.edges.size(); ++e) {
        adj[g.edges[e].first].emplace_back(g.edges[e].second, static_cast<int>(e));
        adj[g.edges[e].second].emplace_back(g.edges[e].first, static_cast<int>(e));
    }
    std::vector<int> path;
    std::vector<int> path_edges;
    std::vector<bool> on_path(g.order, false);
    auto labels_distinct = [&]() {
        for (size_t a = 0; a < path_edges.size(); ++a)
            for (size_t b = a + 1; b < path_edges.size(); ++b)
                if (g.labels[path_edges[a]] == g.labels[path_edges[b]]) return false;
        return true;
    };
    auto dfs = [&](auto&& self, int root, int cur) -> bool {
        for (auto [w, e] : adj[cur]) {
            if (w == root && path.size() >= 3) {
                path_edges.push_back(e);
                bool hit = labels_distinct();
                if (hit && path[1] < path.back()) {
                    g.distinct_label_cycle = path;
                    return true;
                }
                path_edges.pop_back();
            } else if (w > root && !on_path[w]) {
                path.push_back(w);
                path_edges.push_back(e);
                on_path[w] = true;
                if (self(self, root, w)) return true;
                on_path[w] = false;
                path_edges.pop_back();
                path.pop_back();
            }
        }
        return false;
    };
    for (int root = 0; root < g.order && !g.distinct_label_cycle; ++root) {
        path = {root};
        path_edges.clear();
        on_path.assign(g.order, false);
        on_path[root] = true;
        dfs(dfs, root, root);
    }
    return g;
}

namespace {

// Enumeration with |C_i  (C_1..C_{i-1})| <= 1, preferring input order;
// full backtracking, so it fails only when no enumeration exists.
std::optional<std::vector<int>> find_enumeration(const std::vector<ElementSet>& family) {
    int m = static_cast<int>(family.size());
    std::vector<int> order;
    std::vector<bool> used(m, false);
    auto dfs = [&](auto&& self, ElementSet unioned) -> bool {
        if (static_cast<int>(order.size()) == m) return true;
        for (int i = 0; i < m; ++i) {
            if (used[i]) continue;
            if ((family[i] & unioned).size() > 1) continue;
            used[i] = true;
            order.push_back(i);
            if (self(self, unioned | family[i])) return true;
            order.pop_back();
            used[i] = false;
        }
        return false;
    };
    if (dfs(dfs, ElementSet())) return order;
    return std::nullopt;
}

}  // namespace

SimpleSubsetReport simple_subset_analysis(const std::vector<ElementSet>& family,
                                          const Ordering& ord) {
    if (family.empty()) throw invalid_input("empty circuit family");
    SimpleSubsetReport rep;

    std::vector<ElementSet> bcs;
    for (const auto& c : family) bcs.push_back(c - ElementSet::single(ord.min_of(c)));
    rep.simple = true;
    for (size_t i = 0; i < bcs.size() && rep.simple; ++i)
        for (size_t j = i + 1; j < bcs.size() && rep.simple; ++j)
            if (bcs[i].intersects(bcs[j])) rep.simple = false;

    // Definitional form: every nonempty pairwise intersection is the minimum
    // of one of the two circuits. Must agree with broken-circuit disjointness.
    bool definitional = true;
    for (size_t i = 0; i < family.size() && definitional; ++i)
        for (size_t j = i + 1; j < family.size() && definitional; ++j) {
            ElementSet common = family[i] & family[j];
            if (common.empty()) continue;
            if (common != ElementSet::single(ord.min_of(family[i])) &&
                common != ElementSet::single(ord.min_of(family[j])))
                definitional = false;
        }
    if (definitional != rep.simple)
        throw internal_error("simple-subset characterizations disagree");

    rep.graph = intersection_graph(family);
    rep.is_forest = rep.graph.is_forest;
    rep.is_tree = rep.graph.is_tree;
    rep.has_distinct_label_cycle = rep.graph.distinct_label_cycle.has_value();

    if (rep.simple && rep.graph.connected) {
        // Tree <=> connected and no element in three members.
        bool three_share = false;
        for (size_t i = 0; i < family.size() && !three_share; ++i)
            for (size_t j = i + 1; j < family.size() && !three_share; ++j)
                for (size_t k = j + 1; k < family.size() && !three_share; ++k)
                    if (!((family[i] & family[j]) & family[k]).empty()) three_share = true;
        if ((rep.graph.connected && !three_share) != rep.is_tree)
            throw internal_error("tree characterizations disagree on a simple subset");
    }

    rep.enumeration = find_enumeration(family);
    if (rep.simple && !rep.enumeration)
        throw internal_error("no admissible enumeration of a simple subset");
    return rep;
}

ElementSet core_set(const std::vector<ElementSet>& family) {
    if (family.empty()) throw invalid_input("empty circuit family");
    ElementSet unioned, shared;
    for (const auto& c : family) unioned |= c;
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j) shared |= family[i] & family[j];
    return unioned - shared;
}

Ordering ordering_from_family(const std::vector<ElementSet>& family, int n) {
    if (family.empty()) throw invalid_input("empty circuit family");
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j)
            if ((family[i] & family[j]).size() > 1)
                throw invalid_input("circuits " + family[i].to_string() + " and " +
                                    family[j].to_string() + " share more than one element");
    auto graph = intersection_graph(family);
    if (graph.distinct_label_cycle) {
        std::string cyc;
        for (int v : *graph.distinct_label_cycle) cyc += " " + family[v].to_string();
        throw invalid_input("intersection graph has a cycle with distinct labels:" + cyc);
    }
    auto enumeration = find_enumeration(family);
    if (!enumeration)
        throw internal_error("no admissible enumeration despite valid preconditions");

    std::vector<int> seq;
    ElementSet placed;
    for (int idx : *enumeration) {
        ElementSet block = family[idx] - placed;
        for (int e : block.to_vector()) seq.push_back(e);
        placed |= family[idx];
    }
    for (int e = 1; e <= n; ++e)
        if (!placed.contains(e)) seq.push_back(e);
    if (static_cast<int>(seq.size()) != n)
        throw invalid_input("family uses labels beyond the ground set");
    return Ordering(std::move(seq));
}

// All cores of tree subfamilies (including singletons); caps the family at 20.
std::vector<ElementSet> tree_subfamily_cores(const std::vector<ElementSet>& family) {
    int m = static_cast<int>(family.size());
    if (m > 20) throw budget_exhausted("tree-subfamily enumeration capped at 20 circuits");
    std::vector<ElementSet> cores;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
        std::vector<ElementSet> sub;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) sub.push_back(family[i]);
        if (intersection_graph(sub).is_tree) cores.push_back(core_set(sub));
    }
    std::sort(cores.begin(), cores.end());
    cores.erase(std::unique(cores.begin(), cores.end()), cores.end());
    return cores;
}

namespace {

std::vector<ElementSet> minimal_bcs_of_perm(const std::vector<ElementSet>& circuits,
                                            const std::vector<int>& pos) {
    std::vector<ElementSet> bcs;
    bcs.reserve(circuits.size());
    for (const auto& c : circuits) {
        int best = 0, best_pos = 1 << 30;
        for (int e : c.to_vector())
            if (pos[e] < best_pos) {
                best_pos = pos[e];
                best = e;
            }
        bcs.push_back(c - ElementSet::single(best));
    }
    std::sort(bcs.begin(), bcs.end());
    bcs.erase(std::unique(bcs.begin(), bcs.end()), bcs.end());
    std::vector<ElementSet> minimal;
    for (const auto& b : bcs) {
        bool keep = true;
        for (const auto& o : bcs)
            if (o != b && o.subset_of(b)) {
                keep = false;
                break;
            }
        if (keep) minimal.push_back(b);
    }
    return minimal;
}

bool pairwise_disjoint(const std::vector<ElementSet>& sets) {
    ElementSet seen;
    for (const auto& s : sets) {
        if (seen.intersects(s)) return false;
        seen |= s;
    }
    return true;
}

struct ClassOutcome {
    bool complete = false;
    std::optional<std::vector<int>> success;  // full permutation sequence
};

// Lexicographic scan of all permutations with a fixed first element.
ClassOutcome scan_class(const Matroid& m, int first, std::uint64_t share,
                        const std::atomic<int>& best_class) {
    int n = m.n();
    std::vector<int> rest;
    for (int e = 1; e <= n; ++e)
        if (e != first) rest.push_back(e);
    std::vector<int> pos(n + 1, 0);
    ClassOutcome out;
    std::uint64_t used = 0;
    do {
        if (best_class.load(std::memory_order_relaxed) < first) return out;  // cannot win
        if (used++ >= share) return out;  // budget share spent, incomplete
        pos[first] = 0;
        for (int i = 0; i < n - 1; ++i) pos[rest[i]] = i + 1;
        if (pairwise_disjoint(minimal_bcs_of_perm(m.circuits(), pos))) {
            std::vector<int> seq = {first};
            seq.insert(seq.end(), rest.begin(), rest.end());
            out.success = seq;
            out.complete = true;
            return out;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    out.complete = true;
    return out;
}

CiOrderingResult permutation_search(const Matroid& m, std::uint64_t budget, int workers) {
    int n = m.n();
    std::uint64_t share = budget / std::max(1, n);
    std::vector<ClassOutcome> outcomes(n + 1);
    std::atomic<int> best_class{n + 1};
    std::atomic<int> next{1};

    auto work = [&]() {
        while (true) {
            int cls = next.fetch_add(1);
            if (cls > n) return;
            outcomes[cls] = scan_class(m, cls, share, best_class);
            if (outcomes[cls].success) {
                int expect = best_class.load();
                while (cls < expect && !best_class.compare_exchange_weak(expect, cls)) {
                }
            }
        }
    };
    workers = std::max(1, std::min(workers, n));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    CiOrderingResult res;
    for (int cls = 1; cls <= n; ++cls) {
        if (outcomes[cls].success) {
            res.status = SearchStatus::found;
            res.ordering = Ordering(*outcomes[cls].success);
            res.minimal = minimal_broken_circuits(m, *res.ordering).minimal;
            return res;
        }
        // A cancelled class counts as complete: a smaller class already won.
        if (!outcomes[cls].complete) res.status = SearchStatus::exhausted;
    }
    if (res.status != SearchStatus::exhausted) res.status = SearchStatus::proven_none;
    return res;
}

// DFS over candidate simple families for n > 8. Circuits are processed in
// size-ascending order; each one is either adopted into the family or must
// already be the core of a tree inside the adopted prefix. Complete: if some
// ordering works, the family of circuits realizing the minimal broken
// circuits passes every test along its branch.
struct FamilySearch {
    const Matroid& m;
    const std::vector<ElementSet>& circuits;
    std::vector<std::vector<bool>> compat;
    std::uint64_t budget;
    std::uint64_t steps = 0;
    bool out_of_budget = false;
    std::vector<int> chosen;
    std::optional<std::vector<ElementSet>> winner;

    explicit FamilySearch(const Matroid& mat, std::uint64_t b)
        : m(mat), circuits(mat.circuits()), budget(b) {
        size_t k = circuits.size();
        compat.assign(k, std::vector<bool>(k, false));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j)
                compat[i][j] = (circuits[i] & circuits[j]).size() <= 1;
    }

    bool covered_by_tree(const ElementSet& target) {
        // Tree members are strictly smaller than the core they produce.
        std::vector<int> cands;
        for (int i : chosen)
            if (circuits[i].size() < target.size()) cands.push_back(i);
        int k = static_cast<int>(cands.size());
        if (k == 0 || k > 20) return false;
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << k); ++mask) {
            if (std::popcount(mask) < 2) continue;
            std::vector<ElementSet> sub;
            for (int i = 0; i < k; ++i)
                if ((mask >> i) & 1) sub.push_back(circuits[cands[i]]);
            ElementSet unioned;
            for (const auto& s : sub) unioned |= s;
            if (!target.subset_of(unioned)) continue;
            if (core_set(sub) == target && intersection_graph(sub).is_tree) return true;
        }
        return false;
    }

    bool finish() {
        if (chosen.empty()) return false;
        std::vector<ElementSet> family;
        for (int i : chosen) family.push_back(circuits[i]);
        if (intersection_graph(family).distinct_label_cycle) return false;
        auto cores = tree_subfamily_cores(family);
        if (cores != circuits) return false;
        winner = family;
        return true;
    }

    bool dfs(size_t k) {
        if (++steps > budget) {
            out_of_budget = true;
            return false;
        }
        if (k == circuits.size()) return finish();
        // Adopt.
        bool ok = true;
        for (int i : chosen)
            if (!compat[i][k]) {
                ok = false;
                break;
            }
        if (ok) {
            chosen.push_back(static_cast<int>(k));
            if (dfs(k + 1)) return true;
            chosen.pop_back();
        }
        // Skip, provided the circuit is already reachable as a tree core.
        if (covered_by_tree(circuits[k]) && dfs(k + 1)) return true;
        return false;
    }
};

CiOrderingResult family_search(const Matroid& m, std::uint64_t budget) {
    FamilySearch search(m, budget);
    CiOrderingResult res;
    if (search.dfs(0)) {
        Ordering ord = ordering_from_family(*search.winner, m.n());
        auto bc = minimal_broken_circuits(m, ord);
        if (!pairwise_disjoint(bc.minimal))
            throw internal_error("family certificate produced a non-CI ordering");
        res.status = SearchStatus::found;
        res.ordering = ord;
        res.minimal = bc.minimal;
        return res;
    }
    res.status = search.out_of_budget ? SearchStatus::exhausted : SearchStatus::proven_none;
    return res;
}

}  // namespace

CiOrderingResult find_ci_ordering(const Matroid& m, std::uint64_t budget, int workers) {
    if (m.is_free()) {
        CiOrderingResult res;
        res.status = SearchStatus::found;
        res.ordering = Ordering::natural(m.n());
        return res;
    }
    if (m.n() <= 8) return permutation_search(m, budget, workers);
    return family_search(m, budget);
}

}  // namespace bcx
