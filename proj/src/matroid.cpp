#include "bcx/matroid.hpp"

#include <algorithm>
#include <string>

#include "bcx/errors.hpp"
#include "bcx/qlinalg.hpp"

namespace bcx {

Matroid::Matroid(int n, std::vector<ElementSet> circuits, bool validate)
    : n_(n), circuits_(std::move(circuits)) {
    if (n < 0 || n > ElementSet::max_elements)
        throw invalid_input("ground-set size must be in 0..64");
    std::sort(circuits_.begin(), circuits_.end());
    circuits_.erase(std::unique(circuits_.begin(), circuits_.end()), circuits_.end());
    if (validate) validate_family();
    rank_ = rank_query(ElementSet::full(n_)).rank;
}

void Matroid::validate_family() const {
    const ElementSet ground = ElementSet::full(n_);
    for (const auto& c : circuits_) {
        if (!c.subset_of(ground))
            throw invalid_input("circuit " + c.to_string() + " uses labels outside 1.." +
                                std::to_string(n_));
        if (c.size() < 3)
            throw invalid_input("circuit " + c.to_string() +
                                " has fewer than 3 elements; matroid is not simple");
    }
    for (size_t i = 0; i < circuits_.size(); ++i)
        for (size_t j = 0; j < circuits_.size(); ++j)
            if (i != j && circuits_[i].subset_of(circuits_[j]))
                throw invalid_input("circuit family is not an antichain: " +
                                    circuits_[i].to_string() + " inside " +
                                    circuits_[j].to_string());
    // Pairwise elimination only; full axiom validation is exponential.
    for (size_t i = 0; i < circuits_.size(); ++i)
        for (size_t j = i + 1; j < circuits_.size(); ++j) {
            ElementSet common = circuits_[i] & circuits_[j];
            for (int e : common.to_vector()) {
                ElementSet target = (circuits_[i] | circuits_[j]) - ElementSet::single(e);
                bool found = false;
                for (const auto& c : circuits_)
                    if (c.subset_of(target)) {
                        found = true;
                        break;
                    }
                if (!found)
                    throw invalid_input("circuit elimination fails for " +
                                        circuits_[i].to_string() + ", " + circuits_[j].to_string() +
                                        " at element " + std::to_string(e));
            }
        }
}

Matroid Matroid::from_circuits(int n, std::vector<ElementSet> circuits) {
    return Matroid(n, std::move(circuits), true);
}

Matroid Matroid::uniform(int m, int n) {
    if (n < 0 || m < 0 || m > n) throw invalid_input("uniform matroid needs 0 <= m <= n");
    if (m < 2 && m != n) throw invalid_input("uniform(m,n) with m < 2 < n is not simple");
    std::vector<ElementSet> circuits;
    if (m < n) {
        // All (m+1)-subsets of [n].
        std::vector<int> idx(m + 1);
        for (int i = 0; i <= m; ++i) idx[i] = i + 1;
        while (true) {
            circuits.push_back(ElementSet::from_vector(idx));
            int i = m;
            while (i >= 0 && idx[i] == n - m + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j <= m; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return Matroid(n, std::move(circuits), false);
}

Matroid Matroid::direct_sum(const Matroid& a, const Matroid& b) {
    std::vector<ElementSet> circuits = a.circuits();
    for (const auto& c : b.circuits()) {
        ElementSet shifted;
        for (int e : c.to_vector()) shifted.add(e + a.n());
        circuits.push_back(shifted);
    }
    return Matroid(a.n() + b.n(), std::move(circuits), false);
}

Matroid Matroid::cycle_matroid(const SimpleGraph& g) {
    return Matroid(g.edge_count(), g.cycle_edge_sets(), false);
}

Matroid Matroid::vector_matroid(const std::vector<std::vector<Rational>>& columns) {
    int n = static_cast<int>(columns.size());
    if (n == 0 || n > 16) throw invalid_input("vector matroid needs 1..16 columns");
    size_t rows = columns[0].size();
    for (const auto& col : columns) {
        if (col.size() != rows) throw invalid_input("ragged matrix");
        if (std::all_of(col.begin(), col.end(), [](const Rational& q) { return q == 0; }))
            throw invalid_input("zero column; matroid not simple");
    }

    QMatrix mat(columns);
    int full_rank = mat.column_rank(ElementSet::full(n));

    std::vector<ElementSet> circuits;
    auto contains_circuit = [&](ElementSet s) {
        for (const auto& c : circuits)
            if (c.subset_of(s)) return true;
        return false;
    };
    // Size-ascending scan: a dependent set without a smaller circuit inside is
    // itself minimal dependent.
    for (int size = 2; size <= std::min(n, full_rank + 1); ++size) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            ElementSet s(mask);
            if (s.size() != size || contains_circuit(s)) continue;
            if (mat.column_rank(s) < size) {
                if (size < 3)
                    throw invalid_input("columns " + s.to_string() +
                                        " are parallel; matroid not simple");
                circuits.push_back(s);
            }
        }
    }
    return Matroid(n, std::move(circuits), false);
}

bool Matroid::is_circuit(const ElementSet& c) const {
    return std::find(circuits_.begin(), circuits_.end(), c) != circuits_.end();
}

bool Matroid::independent(const ElementSet& s) const {
    for (const auto& c : circuits_)
        if (c.subset_of(s)) return false;
    return true;
}

int Matroid::rank(const ElementSet& s) const {
    // Greedy augmentation is exact for matroid rank.
    ElementSet indep;
    for (int e : s.to_vector()) {
        ElementSet cand = indep | ElementSet::single(e);
        if (independent(cand)) indep = cand;
    }
    return indep.size();
}

RankResult Matroid::rank_query(const ElementSet& s) const {
    if (!s.subset_of(ElementSet::full(n_)))
        throw invalid_input("set " + s.to_string() + " outside ground set 1.." + std::to_string(n_));
    RankResult r;
    r.rank = rank(s);
    r.independent = (r.rank == s.size());
    for (int e = 1; e <= n_; ++e) {
        if (s.contains(e)) {
            r.closure.add(e);
            continue;
        }
        if (rank(s | ElementSet::single(e)) == r.rank) r.closure.add(e);
    }
    return r;
}

ElementSet Matroid::coloops() const {
    ElementSet in_some;
    for (const auto& c : circuits_) in_some |= c;
    return ElementSet::full(n_) - in_some;
}

ElementSet Matroid::eliminate_circuit(const std::vector<ElementSet>& chain,
                                      const ElementSet& b) const {
    if (chain.empty()) throw invalid_input("empty circuit chain");
    ElementSet unioned;
    for (size_t i = 0; i < chain.size(); ++i) {
        if (!is_circuit(chain[i]))
            throw invalid_input("chain member " + chain[i].to_string() + " is not a circuit");
        if (i > 0 && chain[i].subset_of(unioned))
            throw invalid_input("chain condition violated: circuit " + std::to_string(i + 1) +
                                " lies in the union of the earlier ones");
        unioned |= chain[i];
    }
    if (b.size() != static_cast<int>(chain.size()) - 1)
        throw invalid_input("|B| must be one less than the chain length");
    ElementSet target = unioned - b;
    for (const auto& c : circuits_)
        if (c.subset_of(target)) return c;
    throw invalid_input("no circuit inside " + target.to_string() +
                        "; circuit family violates the elimination axiom");
}

std::vector<ElementSet> Matroid::flats() const {
    if (n_ > 20) throw budget_exhausted("flat enumeration capped at n <= 20");
    std::vector<ElementSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n_); ++mask) {
        ElementSet s(mask);
        if (rank_query(s).closure == s) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bcx
