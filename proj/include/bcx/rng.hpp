#ifndef BCX_RNG_HPP
#define BCX_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "bcx/ordering.hpp"

namespace bcx {

using Rng = std::mt19937_64;

// Modulo draw; the bias is irrelevant for sampling test orderings, and unlike
// std::uniform_int_distribution it is identical across standard libraries.
inline std::uint64_t rng_below(Rng& rng, std::uint64_t k) { return rng() % k; }

inline Ordering random_ordering(int n, Rng& rng) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng_below(rng, i + 1));
        std::swap(s[i], s[j]);
    }
    return Ordering(std::move(s));
}

}  // namespace bcx

#endif
