#ifndef BCX_MULTIPOLY_HPP
#define BCX_MULTIPOLY_HPP

#include <utility>
#include <vector>

#include "bcx/monomial_ideal.hpp"
#include "bcx/numbers.hpp"
#include "bcx/ordering.hpp"

namespace bcx {

// Monomial order induced by a ground-set ordering: x_i outranks x_j exactly
// when j precedes i, so the broken-circuit monomial leads each generator.
class MonomialOrder {
  public:
    enum class Kind { lex, degrevlex };

    MonomialOrder(const Ordering& ord, Kind kind);

    Kind kind() const { return kind_; }
    // true when a is strictly smaller than b.
    bool less(const Monomial& a, const Monomial& b) const;

  private:
    Kind kind_;
    std::vector<int> vars_desc_;  // variables from highest rank to lowest
};

// Multivariate polynomial over the rationals; terms kept in a canonical
// order-independent form (sorted by exponent), zero coefficients dropped.
class MultiPoly {
  public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::pair<Monomial, Rational>> terms);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }

    const std::pair<Monomial, Rational>& leading(const MonomialOrder& order) const;

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    MultiPoly times_term(const Monomial& mono, const Rational& coeff) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }

    std::string to_string() const;

  private:
    std::vector<std::pair<Monomial, Rational>> terms_;
};

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order);

// Full normal form of p against the family; terminates by well-ordering, with
// a step guard against implementation bugs.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& family,
                      const MonomialOrder& order);

// Buchberger criterion: every S-polynomial reduces to zero. Pairs with
// coprime leading monomials are skipped (they reduce by the first criterion).
bool buchberger_is_groebner(const std::vector<MultiPoly>& family, const MonomialOrder& order);

MonomialIdeal initial_ideal(const std::vector<MultiPoly>& family, const MonomialOrder& order,
                            int nvars);

}  // namespace bcx

#endif
