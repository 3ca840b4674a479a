#ifndef BCX_CLASSIFICATION_HPP
#define BCX_CLASSIFICATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "bcx/broken_circuit.hpp"
#include "bcx/matroid.hpp"
#include "bcx/monomial_ideal.hpp"
#include "bcx/numbers.hpp"
#include "bcx/ordering.hpp"

namespace bcx {

struct LinearResolution {
    int p = 0;               // resolution degree = smallest circuit size - 1
    BigInt hilbert_value;    // H(I, p)
    BigInt hilbert_expected; // binom(p + h - 1, p)
    ElementSet uniform_part; // the set A with circuits = all (p+1)-subsets
    ElementSet coloop_part;  // B, |B| = rank - p
};

// Decides whether the Stanley-Reisner ideal of the broken circuit complex has
// a linear resolution, by the Hilbert-function test and the structural test;
// the two must agree. Errors on a free matroid (zero ideal).
std::optional<LinearResolution> linear_resolution_check(const Matroid& m, const Ordering& ord);

struct CompleteIntersection {
    std::vector<int> degrees;          // sizes of the minimal broken circuits
    std::vector<ElementSet> family;    // circuits realizing condition (iii)
};

// Present exactly when the minimal broken circuits are pairwise disjoint.
// Also certifies condition (iii): the circuit set equals the cores of tree
// subfamilies of the returned family.
std::optional<CompleteIntersection> complete_intersection_check(const Matroid& m,
                                                                const Ordering& ord);

struct SupersolvableResult {
    bool verdict = false;
    std::optional<std::vector<ElementSet>> chain;  // modular flat chain witness
    bool brute_forced = false;
    bool fast_pathed = false;
};

// Brute-force modular-chain search (n <= 12) and, on complete-intersection
// matroids, the all-quadratic fast path; both must agree when both run.
SupersolvableResult supersolvable_check(const Matroid& m, std::uint64_t ci_budget = 5'000'000);

enum class GorensteinKind { complete_intersection, gorenstein_pattern, neither };

struct GorensteinResult {
    GorensteinKind kind = GorensteinKind::neither;
    std::vector<Monomial> u;  // cyclic coprime factors when pattern found
};

// Codimension <= 3 monomial ideals only; searches for the cyclic
// pairwise-coprime generator pattern of a codim-3 monomial Gorenstein ideal.
GorensteinResult gorenstein_codim3_check(const MonomialIdeal& ideal);

struct ClassificationReport {
    std::optional<LinearResolution> linear_resolution;
    std::optional<CompleteIntersection> complete_intersection;
    std::optional<SupersolvableResult> supersolvable;  // absent when capped
    std::optional<GorensteinResult> gorenstein_codim3; // absent unless codim <= 3
    Ordering ordering;                                  // witness ordering used
    bool free_matroid = false;
};

ClassificationReport classify_matroid(const Matroid& m, const Ordering& ord);

}  // namespace bcx

#endif
