#ifndef BCX_MONOMIAL_IDEAL_HPP
#define BCX_MONOMIAL_IDEAL_HPP

#include <string>
#include <vector>

#include "bcx/element_set.hpp"

namespace bcx {

// Monomial in variables x1..xn, dense exponent vector.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(int nvars) : exps_(nvars, 0) {}
    static Monomial squarefree(int nvars, const ElementSet& support);

    int nvars() const { return static_cast<int>(exps_.size()); }
    int exponent(int var) const { return exps_[var - 1]; }  // 1-based
    void set_exponent(int var, int e) { exps_[var - 1] = e; }
    int degree() const;
    bool is_one() const { return degree() == 0; }
    bool is_squarefree() const;
    ElementSet support() const;

    bool divides(const Monomial& m) const;
    bool coprime_with(const Monomial& m) const;
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    // Exact division; throws internal_error when not divisible.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator<(const Monomial& a, const Monomial& b);  // degree, then lex

    std::string to_string() const;  // "x2*x3", "x1^2*x4", "1"

  private:
    std::vector<int> exps_;
};

// Monomial ideal given by generators; minimality tracked explicitly.
class MonomialIdeal {
  public:
    MonomialIdeal() = default;
    MonomialIdeal(int nvars, std::vector<Monomial> gens);

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool minimal() const { return minimal_; }

    // Drops generators divisible by another; the result is the unique minimal
    // monomial generating set.
    MonomialIdeal minimalized() const;
    bool contains(const Monomial& m) const;

    // Height, computed as the minimum size of a variable set meeting every
    // generator's support (the minimal primes of a monomial ideal are the
    // minimal covers).
    int codimension() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

    std::string to_string() const;  // "(x1*x2, x3*x4)"

  private:
    int nvars_ = 0;
    std::vector<Monomial> gens_;
    bool minimal_ = false;
};

}  // namespace bcx

#endif
