#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "collatz/numeric.hpp"

namespace collatz {

/// Finite word over {0,1}, most significant symbol first. The empty word is
/// allowed and interprets to 0.
class BitString {
public:
    BitString() = default;

    /// Throws std::invalid_argument naming the first symbol that is not 0/1.
    explicit BitString(std::string_view bits) : bits_(bits) {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i] != '0' && bits_[i] != '1') {
                throw std::invalid_argument("malformed bit string '" + bits_ + "': symbol '" +
                                            bits_[i] + "' at position " + std::to_string(i));
            }
        }
    }

    static BitString zeros(std::size_t n) { return from_chars(std::string(n, '0')); }
    static BitString ones(std::size_t n) { return from_chars(std::string(n, '1')); }
    static BitString bit(bool b) { return from_chars(b ? "1" : "0"); }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool operator[](std::size_t i) const { return bits_[i] == '1'; }

    const std::string& str() const noexcept { return bits_; }
    std::string_view view() const noexcept { return bits_; }

    BitString repeat(std::size_t times) const {
        std::string out;
        out.reserve(bits_.size() * times);
        for (std::size_t i = 0; i < times; ++i) out += bits_;
        return from_chars(std::move(out));
    }

    /// Word concatenation (the bullet operator).
    friend BitString operator+(const BitString& a, const BitString& b) {
        return from_chars(a.bits_ + b.bits_);
    }
    BitString& operator+=(const BitString& other) {
        bits_ += other.bits_;
        return *this;
    }

    bool operator==(const BitString&) const = default;

    /// Shortlex order: shorter words first, then lexicographic.
    std::strong_ordering operator<=>(const BitString& other) const {
        if (auto c = bits_.size() <=> other.bits_.size(); c != 0) return c;
        return bits_.compare(other.bits_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const BitString& w) { return os << w.bits_; }

private:
    static BitString from_chars(std::string bits) {
        BitString w;
        w.bits_ = std::move(bits);
        return w;
    }

    std::string bits_;
};

/// Numeric value of the word read in binary; leading zeros are ignored.
inline Natural interpret(const BitString& w) {
    Natural value = 0;
    // Chunked to keep the big-integer shifts few on long members.
    constexpr std::size_t chunk = 60;
    const auto& s = w.str();
    for (std::size_t pos = 0; pos < s.size(); pos += chunk) {
        std::size_t len = std::min(chunk, s.size() - pos);
        std::uint64_t part = 0;
        for (std::size_t i = 0; i < len; ++i) part = (part << 1) | (s[pos + i] == '1');
        value <<= len;
        value |= part;
    }
    return value;
}

/// Binary representation of x on exactly n symbols. Defined only when x fits
/// in n bits; throws std::domain_error otherwise.
inline BitString interpret_inv_n(const Natural& x, std::size_t n) {
    if (x < 0 || bit_length(x) > n) {
        throw std::domain_error("cannot write " + to_string(x) + " on " + std::to_string(n) +
                                " bits");
    }
    std::string bits(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
        if (bit_test(x, static_cast<unsigned>(i))) bits[n - 1 - i] = '1';
    }
    return BitString(bits);
}

/// Shortest binary representation; 0 is written "0".
inline BitString interpret_inv_min(const Natural& x) {
    return x == 0 ? BitString("0") : interpret_inv_n(x, bit_length(x));
}

/// Circular shift to the right by i positions, 0 <= i < |w|.
inline BitString rotate_right(const BitString& w, std::size_t i) {
    if (w.empty()) throw std::domain_error("cannot rotate the empty word");
    if (i >= w.size()) {
        throw std::domain_error("rotation index " + std::to_string(i) + " out of range for a word of length " +
                                std::to_string(w.size()));
    }
    const auto& s = w.str();
    return BitString(s.substr(s.size() - i) + s.substr(0, s.size() - i));
}

/// Bitwise complement.
inline BitString complement(const BitString& w) {
    std::string s = w.str();
    for (auto& c : s) c = (c == '0') ? '1' : '0';
    return BitString(s);
}

inline BitString reversed(const BitString& w) {
    return BitString(std::string(w.str().rbegin(), w.str().rend()));
}

/// Text form used on the command line: the empty word prints as "eps".
inline std::string to_cli_string(const BitString& w) { return w.empty() ? "eps" : w.str(); }

inline BitString parse_cli_bits(std::string_view text) {
    return text == "eps" ? BitString() : BitString(text);
}

}  // namespace collatz
