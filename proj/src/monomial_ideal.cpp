#include "bcx/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>

#include "bcx/errors.hpp"

namespace bcx {

Monomial Monomial::squarefree(int nvars, const ElementSet& support) {
    Monomial m(nvars);
    for (int e : support.to_vector()) {
        if (e > nvars) throw invalid_input("support exceeds variable count");
        m.exps_[e - 1] = 1;
    }
    return m;
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

ElementSet Monomial::support() const {
    ElementSet s;
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > 0) s.add(i + 1);
    return s;
}

bool Monomial::divides(const Monomial& m) const {
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > m.exps_[i]) return false;
    return true;
}

bool Monomial::coprime_with(const Monomial& m) const {
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > 0 && m.exps_[i] > 0) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) {
        r.exps_[i] = a.exps_[i] - b.exps_[i];
        if (r.exps_[i] < 0) throw internal_error("monomial division not exact");
    }
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exps_ < b.exps_;
}

std::string Monomial::to_string() const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
        if (exps_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
    }
    return s.empty() ? "1" : s;
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens)
    : nvars_(nvars), gens_(std::move(gens)) {
    for (const auto& g : gens_) {
        if (g.nvars() != nvars_) throw invalid_input("generator in wrong variable count");
        if (g.is_one()) throw invalid_input("unit generator");
    }
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    minimal_ = true;
    for (size_t i = 0; i < gens_.size() && minimal_; ++i)
        for (size_t j = 0; j < gens_.size() && minimal_; ++j)
            if (i != j && gens_[i].divides(gens_[j])) minimal_ = false;
}

MonomialIdeal MonomialIdeal::minimalized() const {
    // Generators are distinct after construction, so divisibility is proper.
    std::vector<Monomial> keep;
    for (size_t i = 0; i < gens_.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens_.size() && !redundant; ++j)
            if (i != j && gens_[j].divides(gens_[i])) redundant = true;
        if (!redundant) keep.push_back(gens_[i]);
    }
    return MonomialIdeal(nvars_, std::move(keep));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

namespace {

// Branch-and-bound minimum hitting set over supports.
void min_cover(const std::vector<ElementSet>& supports, size_t idx, ElementSet chosen, int& best) {
    if (chosen.size() >= best) return;
    while (idx < supports.size() && supports[idx].intersects(chosen)) ++idx;
    if (idx == supports.size()) {
        best = chosen.size();
        return;
    }
    for (int v : supports[idx].to_vector())
        min_cover(supports, idx + 1, chosen | ElementSet::single(v), best);
}

}  // namespace

int MonomialIdeal::codimension() const {
    if (gens_.empty()) return 0;
    std::vector<ElementSet> supports;
    supports.reserve(gens_.size());
    for (const auto& g : gens_) supports.push_back(g.support());
    int best = nvars_ + 1;
    min_cover(supports, 0, ElementSet(), best);
    return best;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars_ != b.nvars_) return false;
    auto ga = a.minimalized().generators();
    auto gb = b.minimalized().generators();
    return ga == gb;
}

std::string MonomialIdeal::to_string() const {
    if (gens_.empty()) return "(0)";
    std::string s = "(";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].to_string();
    }
    return s + ")";
}

}  // namespace bcx
