#include "bcx/invariants.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "bcx/errors.hpp"
#include "bcx/matroid.hpp"

namespace bcx {

IntPolynomial poincare_polynomial(const FaceVectors& fv) {
    return IntPolynomial(std::vector<BigInt>(fv.f.begin(), fv.f.end()));
}

BigInt HilbertData::quotient(int degree) const {
    if (degree < 0) return 0;
    if (degree == 0) return 1;
    BigInt v = 0;
    for (size_t i = 1; i < f.size(); ++i) v += f[i] * binomial(degree - 1, static_cast<int>(i) - 1);
    return v;
}

BigInt HilbertData::ideal(int degree) const {
    return binomial(nvars + degree - 1, degree) - quotient(degree);
}

HilbertData hilbert_series_and_function(const FaceVectors& fv, int nvars) {
    HilbertData h;
    h.f = fv.f;
    h.rank = fv.rank;
    h.nvars = nvars;
    IntPolynomial one_minus_t({BigInt(1), BigInt(-1)});
    IntPolynomial num;
    for (int p = 0; p <= fv.rank; ++p)
        num = num + IntPolynomial::monomial(fv.f[p], p) * one_minus_t.pow(fv.rank - p);
    h.series = RationalFunction(num, one_minus_t.pow(fv.rank));
    return h;
}

IntPolynomial chromatic_whitney(const SimpleGraph& g, const Ordering& ord) {
    Matroid m = Matroid::cycle_matroid(g);
    FaceVectors fv = face_vectors(m, ord);
    int l = g.vertices;
    std::vector<BigInt> c(l + 1, BigInt(0));
    for (int p = 0; p <= fv.rank; ++p) {
        BigInt term = fv.f[p];
        c[l - p] = (p % 2 == 0) ? term : -term;
    }
    return IntPolynomial(std::move(c));
}

namespace {

// Multigraph state for deletion-contraction, kept simple: parallel edges are
// collapsed on contraction (they do not change the chromatic polynomial) and
// loops never arise.
struct DcGraph {
    int vertices;
    std::vector<std::pair<int, int>> edges;  // u < v
};

std::vector<int> dc_key(const DcGraph& g) {
    // Relabel by descending degree (stable) before keying the memo.
    std::vector<int> deg(g.vertices + 1, 0);
    for (auto [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
    }
    std::vector<int> verts(g.vertices);
    for (int i = 0; i < g.vertices; ++i) verts[i] = i + 1;
    std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    std::vector<int> relabel(g.vertices + 1);
    for (int i = 0; i < g.vertices; ++i) relabel[verts[i]] = i + 1;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges) {
        int a = relabel[u], b = relabel[v];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    std::vector<int> key = {g.vertices};
    for (auto [u, v] : edges) {
        key.push_back(u);
        key.push_back(v);
    }
    return key;
}

IntPolynomial dc_recurse(const DcGraph& g, std::map<std::vector<int>, IntPolynomial>& memo) {
    if (g.edges.empty()) return IntPolynomial::monomial(1, g.vertices);
    auto key = dc_key(g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    auto [u, v] = g.edges.back();
    DcGraph del{g.vertices, g.edges};
    del.edges.pop_back();

    // Contract v into u, dropping the contracted edge and collapsing parallels.
    DcGraph con{g.vertices - 1, {}};
    std::vector<std::pair<int, int>> seen;
    for (auto [a, b] : del.edges) {
        if (a == v) a = u;
        if (b == v) b = u;
        if (a == b) throw internal_error("loop during contraction of a simple state");
        if (a > b) std::swap(a, b);
        seen.emplace_back(a, b);
    }
    // Close the label gap left by v.
    for (auto& [a, b] : seen) {
        if (a > v) --a;
        if (b > v) --b;
        if (a > b) std::swap(a, b);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    con.edges = std::move(seen);

    IntPolynomial result = dc_recurse(del, memo) - dc_recurse(con, memo);
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

IntPolynomial chromatic_delcon(const SimpleGraph& g) {
    DcGraph start{g.vertices, g.edges};
    for (auto& [u, v] : start.edges)
        if (u > v) std::swap(u, v);
    std::sort(start.edges.begin(), start.edges.end());
    std::map<std::vector<int>, IntPolynomial> memo;
    return dc_recurse(start, memo);
}

ChromaticPair chromatic_polynomials(const SimpleGraph& g, const Ordering& ord) {
    return ChromaticPair{chromatic_whitney(g, ord), chromatic_delcon(g)};
}

CiPoincare ci_poincare_formula(int n, const std::vector<int>& degrees) {
    int total = 0;
    for (int q : degrees) {
        if (q < 2) throw invalid_input("complete-intersection degrees must be >= 2");
        total += q;
    }
    if (total > n) throw invalid_input("degree sum exceeds ground-set size");

    IntPolynomial t_plus_1({BigInt(1), BigInt(1)});
    CiPoincare out;
    out.poly = t_plus_1.pow(n - total);
    for (int q : degrees) {
        IntPolynomial factor = t_plus_1.pow(q) - IntPolynomial::monomial(1, q);
        out.poly = out.poly * factor;
    }
    out.all_quadratic = std::all_of(degrees.begin(), degrees.end(), [](int q) { return q == 2; });
    out.factors_over_Z = factors_completely_over_Z(out.poly);
    if (out.factors_over_Z != out.all_quadratic)
        throw internal_error("factorization check contradicts the quadratic criterion");
    return out;
}

std::vector<BigInt> wilf_bound_coefficients(int l, bool triangle_free_dual) {
    if (l < 3) throw invalid_input("maximal planar graphs need at least 3 vertices");
    int a_exp, b_exp;
    if (triangle_free_dual) {
        int c = (l + 2) / 3;  // ceil(l/3)
        a_exp = l - 2 * c;
        b_exp = l - 3 + c;
    } else {
        int fl = l / 4;
        a_exp = l - 2 - 2 * fl;
        b_exp = l - 2 + fl;
    }
    std::vector<BigInt> bounds;
    for (int p = 1; p <= l - 1; ++p) {
        BigInt b = 0;
        int kmax = std::min(p, b_exp);
        for (int k = 0; k <= kmax; ++k) {
            BigInt pw = 1;
            for (int i = 0; i < k; ++i) pw *= 2;
            b += binomial(a_exp, p - k) * binomial(b_exp, k) * pw;
        }
        bounds.push_back(b);
    }
    return bounds;
}

}  // namespace bcx
