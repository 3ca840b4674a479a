#include "bcx/classification.hpp"

#include <algorithm>
#include <map>

#include "bcx/errors.hpp"
#include "bcx/invariants.hpp"

namespace bcx {

std::optional<LinearResolution> linear_resolution_check(const Matroid& m, const Ordering& ord) {
    if (m.is_free()) throw invalid_input("free matroid: zero ideal, linear resolution vacuous");
    int n = m.n(), r = m.rank(), h = n - r;
    int smallest = m.circuits().front().size();  // circuits are size-sorted
    int p = smallest - 1;

    // Hilbert test.
    FaceVectors fv = face_vectors(m, ord);
    HilbertData hd = hilbert_series_and_function(fv, n);
    BigInt got = hd.ideal(p);
    BigInt expected = binomial(p + h - 1, p);
    bool test_a = (got == expected);

    // Structural test: coloops aside, the circuits are all (p+1)-subsets.
    ElementSet coloop = m.coloops();
    ElementSet rest = ElementSet::full(n) - coloop;
    bool test_b = (coloop.size() == r - p);
    if (test_b) {
        BigInt expected_count = binomial(rest.size(), p + 1);
        if (BigInt(static_cast<long long>(m.circuits().size())) != expected_count) test_b = false;
        for (const auto& c : m.circuits())
            if (c.size() != p + 1 || !c.subset_of(rest)) {
                test_b = false;
                break;
            }
    }

    if (test_a != test_b)
        throw internal_error("linear-resolution tests disagree: Hilbert says " +
                             std::to_string(test_a) + ", structure says " + std::to_string(test_b));
    if (!test_a) return std::nullopt;
    LinearResolution res;
    res.p = p;
    res.hilbert_value = got;
    res.hilbert_expected = expected;
    res.uniform_part = rest;
    res.coloop_part = coloop;
    return res;
}

std::optional<CompleteIntersection> complete_intersection_check(const Matroid& m,
                                                                const Ordering& ord) {
    BrokenCircuits bc = minimal_broken_circuits(m, ord);
    ElementSet seen;
    for (const auto& b : bc.minimal) {
        if (seen.intersects(b)) return std::nullopt;
        seen |= b;
    }

    CompleteIntersection ci;
    for (const auto& b : bc.minimal) {
        ci.degrees.push_back(b.size());
        std::vector<ElementSet> realizing;
        for (const auto& [c, cbc] : bc.by_circuit)
            if (cbc == b) realizing.push_back(c);
        if (realizing.size() != 1)
            throw internal_error("minimal broken circuit realized by " +
                                 std::to_string(realizing.size()) + " circuits; expected one");
        ci.family.push_back(realizing.front());
    }
    std::sort(ci.degrees.begin(), ci.degrees.end());

    if (static_cast<int>(ci.degrees.size()) != m.n() - m.rank())
        throw internal_error("complete intersection with generator count != codimension");

    // Condition (iii): circuits are exactly the cores of tree subfamilies.
    if (tree_subfamily_cores(ci.family) != m.circuits())
        throw internal_error("tree-subfamily cores do not reproduce the circuit set");
    return ci;
}

namespace {

struct FlatTable {
    std::vector<ElementSet> flats;
    std::vector<int> ranks;
    std::map<std::uint64_t, int> index;
};

bool flat_is_modular(const Matroid& m, const FlatTable& t, int xi) {
    const ElementSet& x = t.flats[xi];
    int rx = t.ranks[xi];
    for (size_t yi = 0; yi < t.flats.size(); ++yi) {
        const ElementSet& y = t.flats[yi];
        ElementSet meet = x & y;  // intersection of flats is a flat
        int r_meet = t.ranks[t.index.at(meet.mask())];
        int r_join = m.rank(x | y);
        if (rx + t.ranks[yi] != r_join + r_meet) return false;
    }
    return true;
}

bool modular_chain_dfs(const Matroid& m, const FlatTable& t, const std::vector<bool>& modular,
                       int current, std::vector<ElementSet>& chain) {
    int r_cur = t.ranks[current];
    if (r_cur == m.rank()) return true;
    for (size_t i = 0; i < t.flats.size(); ++i) {
        if (!modular[i] || t.ranks[i] != r_cur + 1) continue;
        if (!t.flats[current].subset_of(t.flats[i])) continue;
        chain.push_back(t.flats[i]);
        if (modular_chain_dfs(m, t, modular, static_cast<int>(i), chain)) return true;
        chain.pop_back();
    }
    return false;
}

}  // namespace

SupersolvableResult supersolvable_check(const Matroid& m, std::uint64_t ci_budget) {
    SupersolvableResult out;

    bool brute_available = m.n() <= 12;
    if (brute_available) {
        FlatTable t;
        t.flats = m.flats();
        for (size_t i = 0; i < t.flats.size(); ++i) {
            t.ranks.push_back(m.rank(t.flats[i]));
            t.index[t.flats[i].mask()] = static_cast<int>(i);
        }
        std::vector<bool> modular(t.flats.size());
        for (size_t i = 0; i < t.flats.size(); ++i) modular[i] = flat_is_modular(m, t, static_cast<int>(i));

        int empty_idx = t.index.at(0);
        std::vector<ElementSet> chain = {t.flats[empty_idx]};
        out.brute_forced = true;
        if (modular[empty_idx] && modular_chain_dfs(m, t, modular, empty_idx, chain)) {
            out.verdict = true;
            out.chain = chain;
        } else {
            out.verdict = false;
        }
    }

    CiOrderingResult ci = find_ci_ordering(m, ci_budget);
    if (ci.status == SearchStatus::found) {
        bool fast = std::all_of(ci.minimal.begin(), ci.minimal.end(),
                                [](const ElementSet& b) { return b.size() == 2; });
        if (out.brute_forced && out.verdict != fast)
            throw internal_error("supersolvability fast path disagrees with the modular chain");
        out.verdict = fast;
        out.fast_pathed = true;
    }

    if (!out.brute_forced && !out.fast_pathed)
        throw budget_exhausted("matroid too large for brute force and not decided CI");
    return out;
}

GorensteinResult gorenstein_codim3_check(const MonomialIdeal& ideal) {
    if (!ideal.minimal()) throw invalid_input("generating set is not minimal");
    int codim = ideal.codimension();
    if (codim > 3) throw invalid_input("codimension " + std::to_string(codim) + " exceeds 3");

    const auto& gens = ideal.generators();
    GorensteinResult res;

    bool pairwise_coprime = true;
    for (size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
        for (size_t j = i + 1; j < gens.size() && pairwise_coprime; ++j)
            if (!gens[i].coprime_with(gens[j])) pairwise_coprime = false;
    if (pairwise_coprime) {
        res.kind = GorensteinKind::complete_intersection;
        return res;
    }

    int m = static_cast<int>(gens.size());
    if (m % 2 == 0 || m < 5) return res;  // pattern needs odd m; m = 3 is the CI case
    if (m > 9) throw budget_exhausted("cyclic pattern search capped at 9 generators");

    int s = (m - 1) / 2;
    std::vector<int> perm(m - 1);
    for (int i = 0; i < m - 1; ++i) perm[i] = i + 1;
    do {
        std::vector<Monomial> v = {gens[0]};
        for (int i : perm) v.push_back(gens[i]);
        // u_i is what v_i carries beyond its overlap with the next generator.
        std::vector<Monomial> u;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            Monomial g = gcd(v[i], v[(i + 1) % m]);
            u.push_back(v[i] / g);
        }
        for (int i = 0; i < m && ok; ++i)
            for (int j = i + 1; j < m && ok; ++j)
                if (!u[i].coprime_with(u[j])) ok = false;
        for (int i = 0; i < m && ok; ++i) {
            Monomial prod(u[0].nvars());
            for (int k = 0; k < s; ++k) prod = prod * u[(i + k) % m];
            if (!(prod == v[i])) ok = false;
        }
        if (ok) {
            res.kind = GorensteinKind::gorenstein_pattern;
            res.u = u;
            return res;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return res;
}

ClassificationReport classify_matroid(const Matroid& m, const Ordering& ord) {
    ClassificationReport rep;
    rep.ordering = ord;
    rep.free_matroid = m.is_free();
    if (!rep.free_matroid) rep.linear_resolution = linear_resolution_check(m, ord);
    rep.complete_intersection = complete_intersection_check(m, ord);
    try {
        rep.supersolvable = supersolvable_check(m);
    } catch (const budget_exhausted&) {
        rep.supersolvable = std::nullopt;
    }
    MonomialIdeal ideal = stanley_reisner_ideal(m, ord);
    if (!ideal.is_zero() && ideal.codimension() <= 3)
        rep.gorenstein_codim3 = gorenstein_codim3_check(ideal);
    return rep;
}

}  // namespace bcx
