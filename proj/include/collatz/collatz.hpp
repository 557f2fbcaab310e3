#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "collatz/bitstring.hpp"
#include "collatz/mod3k.hpp"
#include "collatz/numeric.hpp"

namespace collatz {

/// Down is an even step x -> x/2, Left an odd step x -> (3x+1)/2.
enum class Arrow : char { down = 'd', left = 'l' };

/// Word over {Down, Left}. Text form: one character per arrow, 'd' or 'l'.
class ParityVector {
public:
    ParityVector() = default;
    explicit ParityVector(std::vector<Arrow> arrows) : arrows_(std::move(arrows)) {}

    /// Parses the 'd'/'l' text form; throws std::invalid_argument on any other symbol.
    static ParityVector parse(std::string_view text) {
        if (text == "eps") return {};
        std::vector<Arrow> arrows;
        arrows.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            switch (text[i]) {
                case 'd': arrows.push_back(Arrow::down); break;
                case 'l': arrows.push_back(Arrow::left); break;
                default:
                    throw std::invalid_argument("malformed parity vector '" + std::string(text) +
                                                "': symbol '" + text[i] + "' at position " +
                                                std::to_string(i));
            }
        }
        return ParityVector(std::move(arrows));
    }

    static ParityVector downs(std::size_t n) { return ParityVector(std::vector(n, Arrow::down)); }
    static ParityVector lefts(std::size_t n) { return ParityVector(std::vector(n, Arrow::left)); }

    /// Total number of arrows.
    std::size_t norm() const noexcept { return arrows_.size(); }

    /// Number of Left arrows.
    std::size_t span() const noexcept {
        return static_cast<std::size_t>(std::count(arrows_.begin(), arrows_.end(), Arrow::left));
    }

    bool empty() const noexcept { return arrows_.empty(); }
    Arrow operator[](std::size_t i) const { return arrows_[i]; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    auto begin() const noexcept { return arrows_.begin(); }
    auto end() const noexcept { return arrows_.end(); }

    ParityVector& push_back(Arrow a) {
        arrows_.push_back(a);
        return *this;
    }

    friend ParityVector operator+(ParityVector a, const ParityVector& b) {
        a.arrows_.reserve(a.arrows_.size() + b.arrows_.size());
        for (Arrow x : b.arrows_) a.arrows_.push_back(x);
        return a;
    }
    friend ParityVector operator+(ParityVector a, Arrow b) { return a.push_back(b); }

    ParityVector repeat(std::size_t times) const {
        ParityVector out;
        for (std::size_t i = 0; i < times; ++i) out = out + *this;
        return out;
    }

    std::string str() const {
        std::string s;
        s.reserve(arrows_.size());
        for (auto a : arrows_) s.push_back(static_cast<char>(a));
        return s;
    }

    bool operator==(const ParityVector&) const = default;
    auto operator<=>(const ParityVector&) const = default;

    friend std::ostream& operator<<(std::ostream& os, const ParityVector& p) {
        return os << (p.empty() ? std::string("eps") : p.str());
    }

private:
    std::vector<Arrow> arrows_;
};

struct Step {
    Natural value;
    bool odd;
};

/// One application of the Collatz map T.
inline Step collatz_step(const Natural& x) {
    if (is_even(x)) return {x >> 1, false};
    return {(3 * x + 1) >> 1, true};
}

/// Parities along n forward steps from x.
inline ParityVector trajectory_parity_vector(Natural x, std::size_t n) {
    std::vector<Arrow> arrows;
    arrows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [next, odd] = collatz_step(x);
        arrows.push_back(odd ? Arrow::left : Arrow::down);
        x = std::move(next);
    }
    return ParityVector(std::move(arrows));
}

/// An arrow is admissible for x when it matches the parity of x.
inline bool admissible(Arrow a, const Natural& x) {
    return (a == Arrow::down) == is_even(x);
}

/// Result of folding a parity vector through the first-occurrence recursions:
/// the encoding of its first occurrence start and the end residue.
struct FirstOccurrence {
    BitString start_bits;  // |start_bits| == norm
    Residue3k end;         // level == span
};

/// Builds the first occurrence incrementally. Appending an arrow prepends 0 to
/// the start encoding when the arrow is admissible for the running end value,
/// 1 otherwise; the end value moves by T_{0,k} or T_{1,k+1}.
inline FirstOccurrence walk_first_occurrence(const ParityVector& p) {
    std::string reversed_bits;
    reversed_bits.reserve(p.norm());
    Residue3k end(0, 0);
    for (Arrow a : p) {
        reversed_bits.push_back(admissible(a, end.value()) ? '0' : '1');
        end = (a == Arrow::down) ? t0k(end) : t1k(end);
    }
    return {BitString(std::string(reversed_bits.rbegin(), reversed_bits.rend())), std::move(end)};
}

/// Least x whose trajectory realizes p; below 2^norm(p).
inline Natural first_occurrence_start(const ParityVector& p) {
    return interpret(walk_first_occurrence(p).start_bits);
}

/// Last element of the first occurrence of p; below 3^span(p).
inline Natural first_occurrence_end(const ParityVector& p) {
    return walk_first_occurrence(p).end.value();
}

/// A tuple realizing a parity vector: values[j+1] = T(values[j]).
struct Occurrence {
    std::vector<Natural> values;
    Natural index;

    const Natural& start() const { return values.front(); }
    const Natural& end() const { return values.back(); }

    /// "(3,5,8,4)".
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) s += ',';
            s += to_string(values[i]);
        }
        return s + ")";
    }
};

/// The i-th occurrence of p, ordered by first element. Starts at
/// 2^norm * i + alpha_00 and ends at 3^span * i + alpha_0,-1.
inline Occurrence occurrence(const ParityVector& p, const Natural& i) {
    const auto first = walk_first_occurrence(p);
    Occurrence occ;
    occ.index = i;
    occ.values.reserve(p.norm() + 1);
    occ.values.push_back(pow2(p.norm()) * i + interpret(first.start_bits));
    for (Arrow a : p) {
        auto [next, odd] = collatz_step(occ.values.back());
        if (odd != (a == Arrow::left)) {
            throw std::logic_error("occurrence does not follow parity vector " + p.str());
        }
        occ.values.push_back(std::move(next));
    }
    if (occ.end() != pow3(p.span()) * i + first.end.value()) {
        throw std::logic_error("occurrence end disagrees with the end recursion for " + p.str());
    }
    return occ;
}

/// Run-length form (s_0, ..., s_k): s_j counts Down arrows in the j-th
/// maximal run, runs being separated by Left arrows.
class FeasibleVector {
public:
    explicit FeasibleVector(std::vector<std::size_t> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw std::invalid_argument("a feasible vector has at least one entry");
    }

    const std::vector<std::size_t>& entries() const noexcept { return entries_; }

    /// l(s) = k.
    std::size_t length() const noexcept { return entries_.size() - 1; }

    /// k + sum of the entries.
    std::size_t norm() const noexcept {
        return length() + std::accumulate(entries_.begin(), entries_.end(), std::size_t{0});
    }

    bool operator==(const FeasibleVector&) const = default;

private:
    std::vector<std::size_t> entries_;
};

inline FeasibleVector to_feasible_vector(const ParityVector& p) {
    std::vector<std::size_t> runs{0};
    for (Arrow a : p) {
        if (a == Arrow::down) {
            ++runs.back();
        } else {
            runs.push_back(0);
        }
    }
    return FeasibleVector(std::move(runs));
}

/// Backtracing v_s(x) = c(s) x - r(s) with c(s) = 2^|s| / 3^l(s) and
/// r(s) = sum_{j<k} 2^(j + s_0 + ... + s_j) / 3^(j+1). Integral exactly when
/// s is backward feasible for x.
inline Rational backtrace(const FeasibleVector& s, const Natural& x) {
    const auto k = s.length();
    Rational c(Natural(pow2(s.norm())), Natural(pow3(k)));
    Rational r = 0;
    std::size_t partial = 0;
    for (std::size_t j = 0; j < k; ++j) {
        partial += s.entries()[j];
        r += Rational(pow2(j + partial), pow3(j + 1));
    }
    return c * Rational(x) - r;
}

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

}  // namespace collatz
