#ifndef BCX_INVARIANTS_HPP
#define BCX_INVARIANTS_HPP

#include <vector>

#include "bcx/broken_circuit.hpp"
#include "bcx/graph.hpp"
#include "bcx/intpoly.hpp"

namespace bcx {

// pi(t) = sum f_{p-1} t^p.
IntPolynomial poincare_polynomial(const FaceVectors& fv);

struct HilbertData {
    RationalFunction series;  // sum f_{p-1} t^p / (1-t)^p over (1-t)^rank
    std::vector<BigInt> f;
    int rank = 0;
    int nvars = 0;

    BigInt quotient(int degree) const;  // H(S/I, d)
    BigInt ideal(int degree) const;     // H(I, d) = binom(n+d-1,d) - H(S/I,d)
};

HilbertData hilbert_series_and_function(const FaceVectors& fv, int nvars);

struct ChromaticPair {
    IntPolynomial whitney;  // via broken-circuit f-vector
    IntPolynomial delcon;   // independent deletion-contraction engine
};

IntPolynomial chromatic_whitney(const SimpleGraph& g, const Ordering& ord);
IntPolynomial chromatic_delcon(const SimpleGraph& g);
ChromaticPair chromatic_polynomials(const SimpleGraph& g, const Ordering& ord);

struct CiPoincare {
    IntPolynomial poly;
    bool factors_over_Z = false;
    bool all_quadratic = false;
};

// (t+1)^(n - sum q_i) * prod ((t+1)^{q_i} - t^{q_i}); the factorization flag is
// decided symbolically and must agree with the all-q_i=2 criterion.
CiPoincare ci_poincare_formula(int n, const std::vector<int>& degrees);

// Upper bounds b_1..b_{l-1} for chromatic coefficients of a maximal planar
// graph; the triangle-free-dual variant sharpens the exponents.
std::vector<BigInt> wilf_bound_coefficients(int l, bool triangle_free_dual);

}  // namespace bcx

#endif
