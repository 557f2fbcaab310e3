#pragma once

// Small independent oracles shared by the tests. They use machine integers
// and the plainest possible algorithms on purpose.

#include <cstdint>
#include <vector>

#include "collatz/collatz.hpp"

namespace testing_support {

/// Every parity vector of norm n, in binary counting order ('d' = 0).
inline std::vector<collatz::ParityVector> all_parity_vectors(std::size_t n) {
    std::vector<collatz::ParityVector> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        std::vector<collatz::Arrow> arrows(n);
        for (std::size_t i = 0; i < n; ++i) {
            arrows[i] = (m >> (n - 1 - i)) & 1 ? collatz::Arrow::left : collatz::Arrow::down;
        }
        out.emplace_back(std::move(arrows));
    }
    return out;
}

/// Does y reach x after some number of steps having used exactly k odd ones?
/// Plain 64-bit simulation with a step cap.
inline bool reaches_with_odd_steps(std::uint64_t y, std::uint64_t x, unsigned k) {
    unsigned odd = 0;
    for (int steps = 0; steps < 100000; ++steps) {
        if (odd == k && y == x) return true;
        if (odd > k || y == 0) return false;
        if (y & 1) {
            y = (3 * y + 1) / 2;
            ++odd;
        } else {
            y /= 2;
        }
    }
    return false;
}

/// Inverse of a modulo m by the extended Euclidean algorithm.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = m, r1 = a % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    return ((s0 % m) + m) % m;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace testing_support
