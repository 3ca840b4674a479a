#ifndef BCX_BROKEN_CIRCUIT_HPP
#define BCX_BROKEN_CIRCUIT_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bcx/element_set.hpp"
#include "bcx/matroid.hpp"
#include "bcx/monomial_ideal.hpp"
#include "bcx/numbers.hpp"
#include "bcx/ordering.hpp"

namespace bcx {

struct BrokenCircuits {
    // (circuit, broken circuit) pairs, in circuit storage order.
    std::vector<std::pair<ElementSet, ElementSet>> by_circuit;
    // Inclusion-minimal broken circuits, sorted.
    std::vector<ElementSet> minimal;
};

BrokenCircuits minimal_broken_circuits(const Matroid& m, const Ordering& ord);

MonomialIdeal stanley_reisner_ideal(const Matroid& m, const Ordering& ord);

// Whether the broken circuits of family generate the whole ideal, i.e. every
// minimal broken circuit is the broken circuit of a family member.
bool is_generating_family(const Matroid& m, const Ordering& ord,
                          const std::vector<ElementSet>& family);

struct FaceVectors {
    std::vector<BigInt> f;  // f[0] = f_{-1} = 1, ..., f[r] = f_{r-1}
    std::vector<BigInt> h;  // h[0..r]
    int rank = 0;
};

// Face counts of the broken circuit complex. Subsets are enumerated densely
// up to dense_cap ground-set elements and by a pruned face walk beyond.
FaceVectors face_vectors(const Matroid& m, const Ordering& ord, int dense_cap = 24);

// Intersection graph of a circuit family; edge labels are the intersections.
struct LabeledIntersectionGraph {
    int order = 0;                                     // number of circuits
    std::vector<std::pair<int, int>> edges;            // 0-based circuit indices
    std::vector<ElementSet> labels;                    // parallel to edges
    bool is_forest = false;
    bool is_tree = false;
    bool connected = false;
    std::optional<std::vector<int>> distinct_label_cycle;  // vertex indices
};

LabeledIntersectionGraph intersection_graph(const std::vector<ElementSet>& family);

struct SimpleSubsetReport {
    bool simple = false;
    LabeledIntersectionGraph graph;
    bool is_forest = false;
    bool is_tree = false;
    bool has_distinct_label_cycle = false;
    // Order of family indices with |C_i  (C_1..C_{i-1})| <= 1, when one exists.
    std::optional<std::vector<int>> enumeration;
};

SimpleSubsetReport simple_subset_analysis(const std::vector<ElementSet>& family,
                                          const Ordering& ord);

// Union of the family minus all pairwise intersections.
ElementSet core_set(const std::vector<ElementSet>& family);

// Cores of all subfamilies whose intersection graph is a tree, sorted and
// deduplicated. Family size capped at 20.
std::vector<ElementSet> tree_subfamily_cores(const std::vector<ElementSet>& family);

// Ordering under which the family becomes simple, built block-by-block.
// Requires pairwise intersections of size <= 1 and no cycle of the
// intersection graph with pairwise distinct labels.
Ordering ordering_from_family(const std::vector<ElementSet>& family, int n);

enum class SearchStatus { found, proven_none, exhausted };

struct CiOrderingResult {
    SearchStatus status = SearchStatus::proven_none;
    std::optional<Ordering> ordering;
    std::vector<ElementSet> minimal;  // minimal broken circuits under ordering
};

// Searches for an ordering making the minimal broken circuits pairwise
// disjoint. Exhaustive lexicographic permutation scan for n <= 8; complete
// DFS over candidate simple families above. budget counts candidate steps.
CiOrderingResult find_ci_ordering(const Matroid& m, std::uint64_t budget = 5'000'000,
                                  int workers = 1);

}  // namespace bcx

#endif
