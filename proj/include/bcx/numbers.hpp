#ifndef BCX_NUMBERS_HPP
#define BCX_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "bcx/errors.hpp"

namespace bcx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

// Parses "p", "-p" or "p/q" with decimal integer parts.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw invalid_input("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw invalid_input("bad rational literal '" + s + "': " + e.what());
    }
}

inline std::string rational_to_string(const Rational& q) { return q.str(); }

}  // namespace bcx

#endif
