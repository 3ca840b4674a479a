#ifndef BCX_ORLIK_TERAO_HPP
#define BCX_ORLIK_TERAO_HPP

#include <optional>
#include <vector>

#include "bcx/arrangement.hpp"
#include "bcx/broken_circuit.hpp"
#include "bcx/classification.hpp"
#include "bcx/intpoly.hpp"
#include "bcx/multipoly.hpp"

namespace bcx {

// del(r) = sum_t a_t * x_{support - t}, the squarefree degree-(|support|-1)
// polynomial attached to a relation.
MultiPoly partial_of_relation(const Relation& r);

// One Orlik-Terao generator per circuit, in circuit storage order.
std::vector<MultiPoly> ot_generators(const Arrangement& a);

struct GroebnerReport {
    bool is_groebner = false;
    MonomialIdeal initial;
    bool matches_stanley_reisner = false;
};

// Runs the Buchberger criterion on the circuit generators under the induced
// order and compares the initial ideal with the broken-circuit ideal.
GroebnerReport groebner_verify(const Arrangement& a, const Ordering& ord,
                               MonomialOrder::Kind kind);

// Relation space spanned by relations of 3-element circuits?
bool two_formal_check(const Arrangement& a);

struct ArrangementClassification {
    int n = 0;
    int rank = 0;
    IntPolynomial poincare;
    std::optional<LinearResolution> linear_resolution;
    bool free_matroid = false;

    SearchStatus ci_status = SearchStatus::exhausted;
    std::optional<Ordering> ci_ordering;
    std::vector<int> ci_degrees;           // when CI
    std::optional<bool> factors_over_Z;    // when CI
    std::optional<bool> all_quadratic;     // when CI
    std::optional<SupersolvableResult> supersolvable;  // absent when capped
    bool two_formal = false;
    // Koszulness of the Orlik-Solomon / Orlik-Terao algebras is reported via
    // the theorem equivalence with all-quadratic degrees, not certified.
    std::optional<bool> koszul_proxy;
};

ArrangementClassification classify_arrangement(const Arrangement& a,
                                               std::uint64_t budget = 5'000'000,
                                               int workers = 1);

}  // namespace bcx

#endif
