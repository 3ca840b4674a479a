#include "bcx/intpoly.hpp"

#include <algorithm>

#include "bcx/errors.hpp"

namespace bcx {

IntPolynomial IntPolynomial::monomial(BigInt coeff, int degree) {
    std::vector<BigInt> c(degree + 1, BigInt(0));
    c[degree] = std::move(coeff);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::pow(int e) const {
    IntPolynomial r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rational IntPolynomial::eval(const Rational& t) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& a,
                                                         const IntPolynomial& b) {
    if (b.is_zero()) throw internal_error("division by zero polynomial");
    std::vector<Rational> rem(a.c_.begin(), a.c_.end());
    int db = b.degree();
    if (a.degree() < db) return a.is_zero() ? std::optional<IntPolynomial>(IntPolynomial()) : std::nullopt;
    std::vector<Rational> q(a.degree() - db + 1, Rational(0));
    for (int d = a.degree(); d >= db; --d) {
        Rational f = rem[d] / Rational(b.c_[db]);
        q[d - db] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) rem[d - db + j] -= f * Rational(b.c_[j]);
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    std::vector<BigInt> qi(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        if (denominator(q[i]) != 1) return std::nullopt;
        qi[i] = numerator(q[i]);
    }
    return IntPolynomial(std::move(qi));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
        const BigInt& c = c_[d];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (s.empty())
            s += (c < 0 ? "-" : "");
        else
            s += (c < 0 ? "-" : "+");
        if (mag != 1 || d == 0) s += mag.str();
        if (d >= 1) s += var;
        if (d >= 2) s += "^" + std::to_string(d);
    }
    return s;
}

namespace {

BigInt content(const IntPolynomial& p) {
    BigInt g = 0;
    for (const auto& c : p.coefficients()) g = boost::multiprecision::gcd(g, c);
    return g;
}

IntPolynomial from_rationals(std::vector<Rational> v) {
    // Clear denominators and strip content; primitive representative.
    BigInt den_lcm = 1;
    for (const auto& q : v)
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(q));
    std::vector<BigInt> c(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rational scaled = v[i] * Rational(den_lcm);
        c[i] = numerator(scaled);
    }
    IntPolynomial p{std::move(c)};
    BigInt g = content(p);
    if (g > 1) {
        std::vector<BigInt> d = p.coefficients();
        for (auto& x : d) x /= g;
        p = IntPolynomial(std::move(d));
    }
    return p;
}

// Primitive gcd via Euclid over the rationals; inputs are tiny.
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    while (!b.is_zero()) {
        std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
        int db = b.degree();
        while (static_cast<int>(rem.size()) - 1 >= db) {
            int d = static_cast<int>(rem.size()) - 1;
            Rational f = rem[d] / Rational(b.coefficient(db));
            for (int j = 0; j <= db; ++j) rem[d - db + j] -= f * Rational(b.coefficient(j));
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (rem.empty()) break;
        }
        a = b;
        b = from_rationals(std::move(rem));
    }
    if (a.is_zero()) return IntPolynomial::constant(1);
    BigInt g = content(a);
    std::vector<BigInt> c = a.coefficients();
    for (auto& x : c) x /= g;
    IntPolynomial p{std::move(c)};
    if (p.leading() < 0) p = p * IntPolynomial::constant(-1);
    return p;
}

}  // namespace

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den) {
    if (den.is_zero()) throw invalid_input("zero denominator");
    IntPolynomial g = poly_gcd(num, den);
    auto qn = IntPolynomial::divide_exact(num, g);
    auto qd = IntPolynomial::divide_exact(den, g);
    if (!qn || !qd) throw internal_error("gcd does not divide its arguments");
    num_ = *qn;
    den_ = *qd;
    BigInt cn = content(num_), cd = content(den_);
    BigInt cg = boost::multiprecision::gcd(cn, cd);
    if (cg > 1) {
        auto scale = [&](IntPolynomial& p) {
            std::vector<BigInt> c = p.coefficients();
            for (auto& x : c) x /= cg;
            p = IntPolynomial(std::move(c));
        };
        scale(num_);
        scale(den_);
    }
    if (den_.leading() < 0) {
        num_ = num_ * IntPolynomial::constant(-1);
        den_ = den_ * IntPolynomial::constant(-1);
    }
}

std::string RationalFunction::to_string(const std::string& var) const {
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

namespace {

std::vector<BigInt> positive_divisors(const BigInt& n) {
    BigInt a = n < 0 ? BigInt(-n) : n;
    if (a == 0) throw internal_error("divisors of zero");
    std::vector<BigInt> out;
    BigInt i = 1;
    long long guard = 0;
    for (; i * i <= a; ++i) {
        if (++guard > 2'000'000) throw budget_exhausted("divisor scan too large");
        if (a % i == 0) {
            out.push_back(i);
            if (i * i != a) out.push_back(a / i);
        }
    }
    return out;
}

}  // namespace

bool factors_completely_over_Z(const IntPolynomial& p) {
    if (p.is_zero()) throw invalid_input("zero polynomial has no factorization");
    IntPolynomial cur = p;
    // Factor out t.
    while (cur.degree() >= 1 && cur.coefficient(0) == 0) {
        std::vector<BigInt> c(cur.coefficients().begin() + 1, cur.coefficients().end());
        cur = IntPolynomial(std::move(c));
    }
    while (cur.degree() >= 1) {
        bool deflated = false;
        // Rational roots are -b/a with b | constant and a | leading.
        for (const BigInt& a : positive_divisors(cur.leading())) {
            for (const BigInt& b : positive_divisors(cur.coefficient(0))) {
                for (int sign : {1, -1}) {
                    std::vector<BigInt> lin = {sign * b, a};  // a t + sign b
                    auto q = IntPolynomial::divide_exact(cur, IntPolynomial(lin));
                    if (q) {
                        cur = *q;
                        deflated = true;
                        break;
                    }
                }
                if (deflated) break;
            }
            if (deflated) break;
        }
        if (!deflated) return false;
    }
    return true;
}

}  // namespace bcx
