#include "bcx/orlik_terao.hpp"

#include <algorithm>

#include "bcx/errors.hpp"
#include "bcx/invariants.hpp"

namespace bcx {

MultiPoly partial_of_relation(const Relation& r) {
    int n = static_cast<int>(r.coefficients.size()) - 1;
    std::vector<std::pair<Monomial, Rational>> terms;
    for (int t : r.support.to_vector())
        terms.emplace_back(Monomial::squarefree(n, r.support - ElementSet::single(t)),
                           r.coefficients[t]);
    return MultiPoly(std::move(terms));
}

std::vector<MultiPoly> ot_generators(const Arrangement& a) {
    std::vector<MultiPoly> gens;
    for (const auto& c : a.underlying_matroid().circuits())
        gens.push_back(partial_of_relation(circuit_relation(a, c)));
    return gens;
}

GroebnerReport groebner_verify(const Arrangement& a, const Ordering& ord,
                               MonomialOrder::Kind kind) {
    Matroid m = a.underlying_matroid();
    MonomialOrder order(ord, kind);
    std::vector<MultiPoly> gens;
    for (const auto& c : m.circuits()) {
        MultiPoly g = partial_of_relation(circuit_relation(a, c));
        // The leading monomial must be the broken-circuit monomial.
        ElementSet bc = c - ElementSet::single(ord.min_of(c));
        if (!(g.leading(order).first == Monomial::squarefree(a.n(), bc)))
            throw internal_error("induced order does not lead with the broken circuit");
        gens.push_back(std::move(g));
    }

    GroebnerReport rep;
    rep.is_groebner = buchberger_is_groebner(gens, order);
    rep.initial = initial_ideal(gens, order, a.n());
    rep.matches_stanley_reisner = (rep.initial == stanley_reisner_ideal(m, ord));
    return rep;
}

bool two_formal_check(const Arrangement& a) {
    Matroid m = a.underlying_matroid();
    int relation_dim = a.n() - m.rank();
    if (relation_dim == 0) return true;  // zero relation space, vacuous

    std::vector<std::vector<Rational>> rows;
    for (const auto& c : m.circuits()) {
        if (c.size() != 3) continue;
        Relation r = circuit_relation(a, c);
        rows.push_back(std::vector<Rational>(r.coefficients.begin() + 1, r.coefficients.end()));
    }
    if (rows.empty()) return false;
    // Exact rank of the span; rows as columns of a QMatrix.
    QMatrix mat(std::move(rows));
    return mat.rank() == relation_dim;
}

ArrangementClassification classify_arrangement(const Arrangement& a, std::uint64_t budget,
                                               int workers) {
    ArrangementClassification out;
    Matroid m = a.underlying_matroid();
    out.n = a.n();
    out.rank = m.rank();
    out.free_matroid = m.is_free();

    Ordering natural = Ordering::natural(a.n());
    FaceVectors fv = face_vectors(m, natural);
    out.poincare = poincare_polynomial(fv);
    if (!m.is_free()) out.linear_resolution = linear_resolution_check(m, natural);

    CiOrderingResult ci = find_ci_ordering(m, budget, workers);
    out.ci_status = ci.status;
    out.two_formal = two_formal_check(a);

    if (ci.status == SearchStatus::found) {
        out.ci_ordering = ci.ordering;
        for (const auto& b : ci.minimal) out.ci_degrees.push_back(b.size());
        std::sort(out.ci_degrees.begin(), out.ci_degrees.end());

        CiPoincare cp = ci_poincare_formula(a.n(), out.ci_degrees);
        if (!(cp.poly == out.poincare))
            throw internal_error("complete-intersection Poincare formula disagrees with faces");
        out.factors_over_Z = cp.factors_over_Z;
        out.all_quadratic = cp.all_quadratic;
        out.koszul_proxy = cp.all_quadratic;

        try {
            out.supersolvable = supersolvable_check(m, budget);
        } catch (const budget_exhausted&) {
            out.supersolvable = std::nullopt;
        }

        // Equivalence block of the final characterization: factorization,
        // quadratic degrees, supersolvability and 2-formality must agree.
        if (cp.factors_over_Z != cp.all_quadratic)
            throw internal_error("factorization flag off the quadratic criterion");
        if (out.supersolvable && out.supersolvable->verdict != cp.all_quadratic)
            throw internal_error("supersolvability breaks the equivalence block");
        if (out.two_formal != cp.all_quadratic)
            throw internal_error("2-formality breaks the equivalence block");
    } else {
        try {
            out.supersolvable = supersolvable_check(m, budget);
        } catch (const budget_exhausted&) {
            out.supersolvable = std::nullopt;
        }
    }
    return out;
}

}  // namespace bcx
