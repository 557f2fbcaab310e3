#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "collatz/bitstring.hpp"
#include "collatz/mod3k.hpp"
#include "collatz/numeric.hpp"
#include "collatz/regex.hpp"

namespace collatz {

/// Word written when a residue 2^-i1 at level k+1 is walked down r times to
/// reach 2^-i0, together with r = (i0 - i1) mod pi_{k+1}.
struct Join {
    BitString word;
    std::size_t r = 0;
};

/// Joining segment for branch i2 of an expression at level k_plus_1.
///
/// x1 = T_{1,k+1}(2^-i2 at level k) has discrete log i1 at level k+1; the
/// join is j_0 ... j_{r-1} with j_{r-1-i} the parity of 2^-(i1+i).
inline Join compute_join(std::size_t i2, std::size_t k_plus_1, std::size_t i0) {
    if (k_plus_1 == 0) throw std::domain_error("compute_join needs a level of at least 1");
    const std::size_t k = k_plus_1 - 1;
    if (i2 >= pi_length(k)) throw std::domain_error("branch index out of range");
    const std::size_t period = pi_length(k_plus_1);
    if (i0 >= period) throw std::domain_error("rotation index out of range");

    const Residue3k x2(inv2_power(i2, k), k);
    const Residue3k x1 = t1k(x2);
    const std::size_t i1 = dlog_inv2(x1);
    const std::size_t r = (i0 + period - i1) % period;

    const auto& table = power_table(k_plus_1);
    std::string bits(r, '0');
    for (std::size_t i = 0; i < r; ++i) {
        if (table.power(i1 + i) & 1U) bits[r - 1 - i] = '1';
    }
    return {BitString(bits), r};
}

/// Bit for the Left arrow leaving 2^-i2 at level k: 0 when that residue is
/// odd (arrow admissible), 1 when even. At level 0 the residue is 0.
inline bool compute_b(std::size_t i2, std::size_t k) {
    if (k == 0) {
        if (i2 != 0) throw std::domain_error("level 0 has a single branch");
        return true;
    }
    if (i2 >= pi_length(k)) throw std::domain_error("branch index out of range");
    return (power_table(k).power(i2) & 1U) == 0;
}

namespace detail {

/// Cache of expressions for unit residues, keyed by (level, residue). Every
/// level-k expression reuses all units of level k-1, so sharing keeps the
/// construction proportional to the number of distinct residues visited.
class UnitRegexCache {
public:
    std::optional<Regex> find(std::size_t k, const Natural& x) {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find({k, x}); it != cache_.end()) return it->second;
        return std::nullopt;
    }

    /// First insertion wins; concurrent builders produce equal expressions.
    Regex insert(std::size_t k, const Natural& x, Regex r) {
        std::lock_guard lock(mutex_);
        return cache_.emplace(std::pair{k, x}, std::move(r)).first->second;
    }

    static UnitRegexCache& instance() {
        static UnitRegexCache cache;
        return cache;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, Natural>, Regex> cache_;
};

inline Regex zeros_star() { return Regex::star(Regex::literal(BitString("0"))); }

inline Regex build_unit_reg(const Natural& x, std::size_t k);

/// Expression for level k-1 residue 2^-i2 (level 0: the residue 0).
inline Regex build_lower(std::size_t i2, std::size_t k) {
    if (k == 0) return zeros_star();
    return build_unit_reg(inv2_power(i2, k), k);
}

inline Regex build_unit_reg(const Natural& x, std::size_t k) {
    auto& cache = UnitRegexCache::instance();
    if (auto hit = cache.find(k, x)) return *hit;

    const std::size_t i0 = dlog_inv2(Residue3k(x, k));
    const Regex rotation = Regex::star(Regex::literal(rotate_right(pi_sequence(k).word, i0)));

    const std::size_t lower = k - 1;
    std::vector<Regex> branches;
    branches.reserve(pi_length(lower));
    for (std::size_t i2 = 0; i2 < pi_length(lower); ++i2) {
        branches.push_back(Regex::concat({
            Regex::literal(compute_join(i2, k, i0).word),
            Regex::literal(BitString::bit(compute_b(i2, lower))),
            build_lower(i2, lower),
        }));
    }
    return cache.insert(k, x, Regex::concat({rotation, Regex::alt(std::move(branches))}));
}

}  // namespace detail

/// Regular expression whose language is the set of binary words, with
/// controlled leading zeros, of the ancestors of x that reach x using the odd
/// map exactly k times.
inline Regex build_reg(const Natural& x, std::size_t k) {
    if (x < 0) throw std::domain_error("build_reg takes a natural number");
    if (k == 0) {
        if (x == 0) return detail::zeros_star();
        return Regex::concat({Regex::literal(interpret_inv_min(x)), detail::zeros_star()});
    }
    if (x % 3 == 0) return Regex::empty_language();
    const Natural& modulus = pow3(k);
    if (x >= modulus) {
        return Regex::concat({Regex::literal(interpret_inv_min(x / modulus)), build_reg(x % modulus, k)});
    }
    return detail::build_unit_reg(x, k);
}

}  // namespace collatz
