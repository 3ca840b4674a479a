#include "bcx/multipoly.hpp"

#include <algorithm>

#include "bcx/errors.hpp"

namespace bcx {

MonomialOrder::MonomialOrder(const Ordering& ord, Kind kind) : kind_(kind) {
    // ord.sequence() runs smallest-first; the last element owns the top variable.
    vars_desc_.assign(ord.sequence().rbegin(), ord.sequence().rend());
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    if (kind_ == Kind::lex) {
        for (int v : vars_desc_) {
            if (a.exponent(v) != b.exponent(v)) return a.exponent(v) < b.exponent(v);
        }
        return false;
    }
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    // degrevlex: scan from the lowest-ranked variable; larger exponent there
    // means the smaller monomial.
    for (auto it = vars_desc_.rbegin(); it != vars_desc_.rend(); ++it) {
        if (a.exponent(*it) != b.exponent(*it)) return a.exponent(*it) > b.exponent(*it);
    }
    return false;
}

MultiPoly::MultiPoly(std::vector<std::pair<Monomial, Rational>> terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<Monomial, Rational>> merged;
    for (auto& [m, c] : terms_) {
        if (!merged.empty() && merged.back().first == m)
            merged.back().second += c;
        else
            merged.emplace_back(std::move(m), std::move(c));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& t) { return t.second == 0; }),
                 merged.end());
    terms_ = std::move(merged);
}

const std::pair<Monomial, Rational>& MultiPoly::leading(const MonomialOrder& order) const {
    if (is_zero()) throw internal_error("leading term of the zero polynomial");
    size_t best = 0;
    for (size_t i = 1; i < terms_.size(); ++i)
        if (order.less(terms_[best].first, terms_[i].first)) best = i;
    return terms_[best];
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    auto terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return MultiPoly(std::move(terms));
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    auto terms = a.terms_;
    for (const auto& [m, c] : b.terms_) terms.emplace_back(m, -c);
    return MultiPoly(std::move(terms));
}

MultiPoly MultiPoly::times_term(const Monomial& mono, const Rational& coeff) const {
    std::vector<std::pair<Monomial, Rational>> terms;
    terms.reserve(terms_.size());
    for (const auto& [m, c] : terms_) terms.emplace_back(m * mono, c * coeff);
    return MultiPoly(std::move(terms));
}

std::string MultiPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = rational_to_string(c < 0 ? Rational(-c) : c);
        if (s.empty())
            s += (c < 0 ? "-" : "");
        else
            s += (c < 0 ? " - " : " + ");
        if (cs != "1" || m.is_one()) s += cs + (m.is_one() ? "" : "*");
        if (!m.is_one()) s += m.to_string();
    }
    return s;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
    const auto& [fm, fc] = f.leading(order);
    const auto& [gm, gc] = g.leading(order);
    Monomial l = lcm(fm, gm);
    return f.times_term(l / fm, Rational(1) / fc) - g.times_term(l / gm, Rational(1) / gc);
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& family,
                      const MonomialOrder& order) {
    MultiPoly rest = p;
    std::vector<std::pair<Monomial, Rational>> remainder;
    long long guard = 0;
    while (!rest.is_zero()) {
        if (++guard > 2'000'000)
            throw internal_error("division did not terminate; monomial order broken");
        const auto& [lm, lc] = rest.leading(order);
        bool reduced = false;
        for (const auto& g : family) {
            if (g.is_zero()) continue;
            const auto& [gm, gc] = g.leading(order);
            if (gm.divides(lm)) {
                rest = rest - g.times_term(lm / gm, lc / gc);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.emplace_back(lm, lc);
            rest = rest - MultiPoly({{lm, lc}});
        }
    }
    return MultiPoly(std::move(remainder));
}

bool buchberger_is_groebner(const std::vector<MultiPoly>& family, const MonomialOrder& order) {
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j) {
            const Monomial& mi = family[i].leading(order).first;
            const Monomial& mj = family[j].leading(order).first;
            if (mi.coprime_with(mj)) continue;  // first Buchberger criterion
            MultiPoly s = s_polynomial(family[i], family[j], order);
            if (!normal_form(s, family, order).is_zero()) return false;
        }
    return true;
}

MonomialIdeal initial_ideal(const std::vector<MultiPoly>& family, const MonomialOrder& order,
                            int nvars) {
    std::vector<Monomial> lms;
    for (const auto& f : family)
        if (!f.is_zero()) lms.push_back(f.leading(order).first);
    return MonomialIdeal(nvars, std::move(lms)).minimalized();
}

}  // namespace bcx
