#ifndef BCX_ARRANGEMENT_HPP
#define BCX_ARRANGEMENT_HPP

#include <vector>

#include "bcx/element_set.hpp"
#include "bcx/graph.hpp"
#include "bcx/matroid.hpp"
#include "bcx/numbers.hpp"
#include "bcx/qlinalg.hpp"
#include "bcx/rng.hpp"

namespace bcx {

// Essential central hyperplane arrangement: n nonzero, pairwise non-parallel
// linear forms spanning the ambient dual space. Columns of the matrix are the
// forms; labels 1..n.
class Arrangement {
  public:
    static Arrangement from_columns(std::vector<std::vector<Rational>> columns);
    // Product in the direct sum of the ambient spaces.
    static Arrangement product(const Arrangement& a, const Arrangement& b);
    // One new coordinate plus the hyperplane there; matroid gains a coloop.
    static Arrangement cone(const Arrangement& a);
    // Random rational forms retried until every circuit has size p+1.
    static Arrangement generic(int p, int count, Rng& rng);
    // Graphic arrangement of a connected graph: form x_u - x_v per edge, with
    // the last vertex pinned to zero to stay essential.
    static Arrangement graphic(const SimpleGraph& g);

    int dimension() const { return dim_; }
    int n() const { return forms_.cols(); }
    const QMatrix& forms() const { return forms_; }

    Matroid underlying_matroid() const;  // capped at n <= 16

  private:
    Arrangement(int dim, QMatrix forms) : dim_(dim), forms_(std::move(forms)) {}
    int dim_ = 0;
    QMatrix forms_;
};

// Exact dependency among the forms on a circuit, normalized so the smallest
// support label carries coefficient 1.
struct Relation {
    std::vector<Rational> coefficients;  // dense over 1..n, zero off support
    ElementSet support;
};

Relation circuit_relation(const Arrangement& a, const ElementSet& circuit);

}  // namespace bcx

#endif
