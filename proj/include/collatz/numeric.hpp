#pragma once

#include <cstddef>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace collatz {

/// Unbounded natural number. Members of the generated languages routinely
/// encode values far beyond 64 bits.
using Natural = boost::multiprecision::cpp_int;

/// Exact rational, used where integrality has to be decided exactly.
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

template <unsigned Base>
const Natural& cached_power(std::size_t exponent) {
    static std::mutex mutex;
    static std::deque<Natural> table{Natural(1)};  // deque keeps references stable
    std::lock_guard lock(mutex);
    while (table.size() <= exponent) {
        table.push_back(table.back() * Base);
    }
    return table[exponent];
}

}  // namespace detail

/// 3^k.
inline const Natural& pow3(std::size_t k) { return detail::cached_power<3>(k); }

/// 2^n.
inline Natural pow2(std::size_t n) {
    Natural r = 1;
    r <<= n;
    return r;
}

inline bool is_odd(const Natural& x) { return bit_test(x, 0); }
inline bool is_even(const Natural& x) { return !bit_test(x, 0); }

/// Number of binary digits of x; bit_length(0) == 0.
inline std::size_t bit_length(const Natural& x) {
    return x == 0 ? 0 : static_cast<std::size_t>(msb(x)) + 1;
}

/// Parses a non-empty decimal string of digits. Rejects signs and blanks.
inline Natural parse_natural(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("expected a natural number, got an empty string");
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("not a natural number: '" + std::string(text) + "'");
        }
    }
    return Natural(std::string(text));
}

inline std::string to_string(const Natural& x) { return x.str(); }

}  // namespace collatz
