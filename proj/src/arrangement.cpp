#include "bcx/arrangement.hpp"

#include <algorithm>
#include <string>

#include "bcx/errors.hpp"

namespace bcx {

namespace {

bool parallel(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    // Both nonzero; parallel iff all 2x2 minors vanish.
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

}  // namespace

Arrangement Arrangement::from_columns(std::vector<std::vector<Rational>> columns) {
    if (columns.empty()) throw invalid_input("arrangement needs at least one hyperplane");
    int dim = static_cast<int>(columns[0].size());
    for (const auto& col : columns) {
        if (static_cast<int>(col.size()) != dim) throw invalid_input("ragged form matrix");
        if (std::all_of(col.begin(), col.end(), [](const Rational& q) { return q == 0; }))
            throw invalid_input("zero linear form");
    }
    for (size_t i = 0; i < columns.size(); ++i)
        for (size_t j = i + 1; j < columns.size(); ++j)
            if (parallel(columns[i], columns[j]))
                throw invalid_input("forms " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) + " are parallel");
    QMatrix mat(std::move(columns));
    if (mat.rank() != dim)
        throw invalid_input("forms do not span the ambient space; arrangement not essential");
    return Arrangement(dim, std::move(mat));
}

Arrangement Arrangement::product(const Arrangement& a, const Arrangement& b) {
    std::vector<std::vector<Rational>> cols;
    for (int j = 0; j < a.n(); ++j) {
        std::vector<Rational> c = a.forms_.column(j);
        c.resize(a.dim_ + b.dim_, Rational(0));
        cols.push_back(std::move(c));
    }
    for (int j = 0; j < b.n(); ++j) {
        std::vector<Rational> c(a.dim_, Rational(0));
        const auto& src = b.forms_.column(j);
        c.insert(c.end(), src.begin(), src.end());
        cols.push_back(std::move(c));
    }
    return from_columns(std::move(cols));
}

Arrangement Arrangement::cone(const Arrangement& a) {
    std::vector<std::vector<Rational>> one = {{Rational(1)}};
    return product(a, from_columns(std::move(one)));
}

Arrangement Arrangement::generic(int p, int count, Rng& rng) {
    if (p < 1 || count < p) throw invalid_input("generic arrangement needs count >= dimension >= 1");
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<std::vector<Rational>> cols;
        for (int j = 0; j < count; ++j) {
            std::vector<Rational> c(p);
            for (int i = 0; i < p; ++i)
                c[i] = Rational(static_cast<long long>(rng_below(rng, 19)) - 9);
            cols.push_back(std::move(c));
        }
        try {
            Arrangement a = from_columns(std::move(cols));
            // Genericity is certified structurally, never assumed: rank p with
            // every circuit of size p+1 pins the uniform matroid.
            Matroid m = a.underlying_matroid();
            bool generic = std::all_of(m.circuits().begin(), m.circuits().end(),
                                       [&](const ElementSet& c) { return c.size() == p + 1; });
            if (generic) return a;
        } catch (const invalid_input&) {
            // zero/parallel/degenerate draw; retry
        }
    }
    throw internal_error("generic arrangement sampling failed 256 times");
}

Arrangement Arrangement::graphic(const SimpleGraph& g) {
    if (!g.connected()) throw invalid_input("graphic arrangement needs a connected graph");
    int dim = g.vertices - 1;
    std::vector<std::vector<Rational>> cols;
    for (auto [u, v] : g.edges) {
        std::vector<Rational> c(dim, Rational(0));
        if (u < g.vertices) c[u - 1] += 1;
        if (v < g.vertices) c[v - 1] -= 1;
        cols.push_back(std::move(c));
    }
    return from_columns(std::move(cols));
}

Matroid Arrangement::underlying_matroid() const {
    if (n() > 16) throw budget_exhausted("circuit enumeration capped at 16 hyperplanes");
    std::vector<std::vector<Rational>> cols;
    for (int j = 0; j < n(); ++j) cols.push_back(forms_.column(j));
    return Matroid::vector_matroid(cols);
}

Relation circuit_relation(const Arrangement& a, const ElementSet& circuit) {
    auto basis = a.forms().nullspace(circuit);
    if (basis.size() != 1)
        throw invalid_input("columns " + circuit.to_string() + " are not a circuit (nullity " +
                            std::to_string(basis.size()) + ")");
    auto labels = circuit.to_vector();
    Relation r;
    r.coefficients.assign(a.n() + 1, Rational(0));
    Rational lead = basis[0][0];
    if (lead == 0) throw internal_error("circuit relation vanishes on the smallest label");
    for (size_t k = 0; k < labels.size(); ++k) {
        Rational c = basis[0][k] / lead;
        if (c == 0) throw internal_error("circuit relation with a gap in its support");
        r.coefficients[labels[k]] = c;
    }
    r.support = circuit;
    return r;
}

}  // namespace bcx
