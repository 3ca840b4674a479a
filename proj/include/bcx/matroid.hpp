#ifndef BCX_MATROID_HPP
#define BCX_MATROID_HPP

#include <vector>

#include "bcx/element_set.hpp"
#include "bcx/graph.hpp"
#include "bcx/numbers.hpp"

namespace bcx {

struct RankResult {
    int rank = 0;
    bool independent = false;
    ElementSet closure;
};

// A simple matroid on [n], given by its circuits. Immutable after
// construction; circuits are stored in (size, mask) order.
class Matroid {
  public:
    static Matroid from_circuits(int n, std::vector<ElementSet> circuits);
    static Matroid uniform(int m, int n);
    static Matroid direct_sum(const Matroid& a, const Matroid& b);
    static Matroid cycle_matroid(const SimpleGraph& g);
    // Columns are the elements; circuits are the minimal dependent column sets.
    static Matroid vector_matroid(const std::vector<std::vector<Rational>>& columns);

    int n() const { return n_; }
    const std::vector<ElementSet>& circuits() const { return circuits_; }
    bool is_free() const { return circuits_.empty(); }

    bool is_circuit(const ElementSet& c) const;
    bool independent(const ElementSet& s) const;
    RankResult rank_query(const ElementSet& s) const;
    int rank(const ElementSet& s) const;
    int rank() const { return rank_; }

    // Elements lying in no circuit.
    ElementSet coloops() const;

    // Circuit-elimination primitive: given circuits C1..Cm with
    // Ci not inside the union of the earlier ones, and |B| = m-1, returns a
    // circuit inside (union Ci) - B.
    ElementSet eliminate_circuit(const std::vector<ElementSet>& chain, const ElementSet& b) const;

    // All flats (closed sets), grouped nowhere; used by the supersolvability
    // search. Requires n <= 20.
    std::vector<ElementSet> flats() const;

  private:
    Matroid(int n, std::vector<ElementSet> circuits, bool validate);
    void validate_family() const;

    int n_ = 0;
    int rank_ = 0;
    std::vector<ElementSet> circuits_;
};

}  // namespace bcx

#endif
