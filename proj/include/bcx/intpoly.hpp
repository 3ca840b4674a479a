#ifndef BCX_INTPOLY_HPP
#define BCX_INTPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "bcx/numbers.hpp"

namespace bcx {

// Univariate polynomial with big-integer coefficients, ascending in degree,
// trailing zeros trimmed. The zero polynomial has an empty coefficient list.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPolynomial constant(BigInt v) { return IntPolynomial({std::move(v)}); }
    static IntPolynomial monomial(BigInt coeff, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<BigInt>& coefficients() const { return c_; }
    BigInt coefficient(int d) const { return d >= 0 && d <= degree() ? c_[d] : BigInt(0); }
    BigInt leading() const { return is_zero() ? BigInt(0) : c_.back(); }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.c_ == b.c_;
    }
    IntPolynomial pow(int e) const;

    Rational eval(const Rational& t) const;

    // Quotient when b divides a exactly over the integers; nullopt otherwise.
    static std::optional<IntPolynomial> divide_exact(const IntPolynomial& a,
                                                     const IntPolynomial& b);

    // Pretty form, highest degree first: "t^3-3t^2+2t".
    std::string to_string(const std::string& var = "t") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

// Ratio of integer polynomials, stored reduced with primitive parts and the
// denominator's leading coefficient positive.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(IntPolynomial::constant(1)) {}
    RationalFunction(IntPolynomial num, IntPolynomial den);

    const IntPolynomial& numerator() const { return num_; }
    const IntPolynomial& denominator() const { return den_; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const std::string& var = "t") const;

  private:
    IntPolynomial num_, den_;
};

// Whether the polynomial splits into linear factors over the integers,
// decided by exact rational-root deflation.
bool factors_completely_over_Z(const IntPolynomial& p);

}  // namespace bcx

#endif
