#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "collatz/bitstring.hpp"
#include "collatz/numeric.hpp"
#include "collatz/regex.hpp"
#include "collatz/regexgen.hpp"

namespace collatz {

/// Decides membership of one word. For each (node, start offset) pair the
/// set of offsets where a match of that node can end is computed once, so the
/// cost is polynomial in |word| times the number of shared nodes and never
/// backtracks.
class Matcher {
public:
    explicit Matcher(const BitString& word) : word_(word.view()) {}

    bool matches(const Regex& r) { return ends(r, 0).test(word_.size()); }

private:
    using Positions = boost::dynamic_bitset<>;

    struct Key {
        const void* node;
        std::size_t start;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            return std::hash<const void*>{}(k.node) ^ (k.start * 0x9e3779b97f4a7c15ULL);
        }
    };

    Positions none() const { return Positions(word_.size() + 1); }

    Positions single(std::size_t at) const {
        Positions p = none();
        p.set(at);
        return p;
    }

    /// Union of ends(r, s) over every s in from.
    Positions advance(const Regex& r, const Positions& from) {
        Positions out = none();
        for (auto s = from.find_first(); s != Positions::npos; s = from.find_next(s)) out |= ends(r, s);
        return out;
    }

    const Positions& ends(const Regex& r, std::size_t start) {
        const Key key{r.id(), start};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        using K = Regex::Kind;
        Positions out = none();
        switch (r.kind()) {
            case K::empty: break;
            case K::literal: {
                const auto& w = r.word().view();
                if (word_.substr(start).starts_with(w)) out.set(start + w.size());
                break;
            }
            case K::alt:
                for (const auto& c : r.children()) out |= ends(c, start);
                break;
            case K::concat: {
                out = single(start);
                for (const auto& c : r.children()) {
                    out = advance(c, out);
                    if (out.none()) break;
                }
                break;
            }
            case K::star: {
                out = single(start);
                Positions frontier = out;
                while (frontier.any()) {
                    Positions next = advance(r.child(), frontier);
                    frontier = next - out;
                    out |= next;
                }
                break;
            }
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

    std::string_view word_;
    std::unordered_map<Key, Positions, KeyHash> memo_;
};

inline bool matches(const Regex& r, const BitString& w) { return Matcher(w).matches(r); }

/// Leading-zero padding tried by matches_value: n < (k+1)^2.
inline std::size_t padding_bound(std::size_t k) { return (k + 1) * (k + 1); }

/// True when 0^n followed by the shortest binary form of y is matched for
/// some 0 <= n < (k+1)^2.
inline bool matches_value(const Regex& r, const Natural& y, std::size_t k) {
    const BitString digits = interpret_inv_min(y);
    for (std::size_t n = 0; n < padding_bound(k); ++n) {
        if (matches(r, BitString::zeros(n) + digits)) return true;
    }
    return false;
}

namespace detail {

inline void sort_unique(std::vector<BitString>& words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

inline std::vector<BitString> product(const std::vector<BitString>& left, const std::vector<BitString>& right) {
    std::vector<BitString> out;
    out.reserve(left.size() * right.size());
    for (const auto& a : left) {
        for (const auto& b : right) out.push_back(a + b);
    }
    sort_unique(out);
    return out;
}

/// Language of each shared node under a per-star repetition bound.
class BoundedLanguage {
public:
    explicit BoundedLanguage(std::size_t max_star_reps) : reps_(max_star_reps) {}

    const std::vector<BitString>& of(const Regex& r) {
        if (auto it = memo_.find(r.id()); it != memo_.end()) return it->second;
        using K = Regex::Kind;
        std::vector<BitString> out;
        switch (r.kind()) {
            case K::empty: break;
            case K::literal: out.push_back(r.word()); break;
            case K::alt:
                for (const auto& c : r.children()) {
                    const auto& sub = of(c);
                    out.insert(out.end(), sub.begin(), sub.end());
                }
                sort_unique(out);
                break;
            case K::concat:
                out.emplace_back();
                for (const auto& c : r.children()) {
                    out = product(out, of(c));
                    if (out.empty()) break;
                }
                break;
            case K::star: {
                const auto& body = of(r.child());
                std::vector<BitString> power{BitString()};
                out = power;
                for (std::size_t i = 0; i < reps_; ++i) {
                    power = product(power, body);
                    out.insert(out.end(), power.begin(), power.end());
                }
                sort_unique(out);
                break;
            }
        }
        return memo_.emplace(r.id(), std::move(out)).first->second;
    }

private:
    std::size_t reps_;
    std::unordered_map<const void*, std::vector<BitString>> memo_;
};

}  // namespace detail

/// Every member obtained by unrolling each star at most max_star_reps times,
/// without duplicates, in (length, lexicographic) order. Requires star
/// height at most 1; deeper nesting is rejected with std::invalid_argument.
inline std::vector<BitString> enumerate(const Regex& r, std::size_t max_star_reps) {
    if (metrics(r).star_height > 1) {
        throw std::invalid_argument("enumeration supports star height at most 1");
    }
    return detail::BoundedLanguage(max_star_reps).of(r);
}

struct Ancestor {
    Natural value;
    BitString word;
};

/// Least interpreted value among the enumerated members; ties go to the
/// shorter word, then the lexicographically smaller one.
inline std::optional<Ancestor> smallest_member(const Regex& r, std::size_t max_star_reps) {
    std::optional<Ancestor> best;
    for (auto& w : enumerate(r, max_star_reps)) {
        Natural v = interpret(w);
        // enumerate is shortlex-ordered, so the first word of a value wins ties.
        if (!best || v < best->value) best = Ancestor{std::move(v), std::move(w)};
    }
    return best;
}

/// Smallest ancestor of x at odd-step distance k found among the members of
/// reg_k(x) with each star unrolled at most max_star_reps times. Exact only
/// relative to that bound.
inline std::optional<Ancestor> smallest_ancestor(const Natural& x, std::size_t k, std::size_t max_star_reps) {
    return smallest_member(build_reg(x, k), max_star_reps);
}

}  // namespace collatz
