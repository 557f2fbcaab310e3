#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "collatz/bitstring.hpp"
#include "collatz/numeric.hpp"

namespace collatz {

/// Element of Z/3^kZ, identified with {0, ..., 3^k - 1}.
class Residue3k {
public:
    Residue3k(Natural value, std::size_t level) : value_(std::move(value)), level_(level) {
        if (value_ < 0 || value_ >= pow3(level_)) {
            throw std::domain_error(to_string(value_) + " is not a residue modulo 3^" +
                                    std::to_string(level_));
        }
    }

    /// Reduces an arbitrary natural modulo 3^level.
    static Residue3k reduce(const Natural& x, std::size_t level) {
        return Residue3k(x % pow3(level), level);
    }

    const Natural& value() const noexcept { return value_; }
    std::size_t level() const noexcept { return level_; }
    bool is_unit() const { return level_ > 0 && value_ % 3 != 0; }

    bool operator==(const Residue3k&) const = default;

private:
    Natural value_;
    std::size_t level_;
};

/// Order of the unit group of Z/3^kZ, 2*3^(k-1); by convention 1 for k = 0.
inline std::size_t pi_length(std::size_t k) {
    if (k == 0) return 1;
    return static_cast<std::size_t>(2 * pow3(k - 1));
}

/// Modular inverse of 2 modulo 3^k, equal to (3^k + 1) / 2.
inline Natural inv2(std::size_t k) {
    if (k == 0) throw std::domain_error("2 has no inverse modulo 3^0");
    return (pow3(k) + 1) / 2;
}

/// Multiplication by the inverse of 2: x/2 for even x, (3^k + x)/2 for odd x.
inline Residue3k t0k(const Residue3k& x) {
    if (is_even(x.value())) return Residue3k(x.value() / 2, x.level());
    return Residue3k((pow3(x.level()) + x.value()) / 2, x.level());
}

/// x -> 2^-1 (3x + 1) modulo 3^(k+1), for x given at level k. The map is
/// 3^k-periodic so the level-k representative determines the result.
inline Residue3k t1k(const Residue3k& x) {
    const auto k = x.level();
    const Natural three_x_plus_one = 3 * x.value() + 1;
    if (is_odd(x.value())) return Residue3k(three_x_plus_one / 2, k + 1);
    return Residue3k((pow3(k + 1) + three_x_plus_one) / 2, k + 1);
}

/// Powers of 2^-1 modulo 3^k and their discrete logarithms.
class PowerTable {
public:
    /// Largest level for which tables are built (dense index of size 3^k).
    static constexpr std::size_t max_level = 14;

    explicit PowerTable(std::size_t k) : level_(k) {
        if (k == 0) throw std::domain_error("no unit group at level 0");
        if (k > max_level) {
            throw std::domain_error("power table for level " + std::to_string(k) +
                                    " exceeds the supported maximum " + std::to_string(max_level));
        }
        const auto modulus = static_cast<std::uint64_t>(pow3(k));
        const auto generator = static_cast<std::uint64_t>(inv2(k));
        const std::size_t order = pi_length(k);
        powers_.reserve(order);
        index_.assign(modulus, -1);
        std::uint64_t p = 1;
        for (std::size_t i = 0; i < order; ++i) {
            if (index_[p] != -1) throw std::logic_error("2^-1 is not a primitive root modulo 3^k");
            index_[p] = static_cast<std::int32_t>(i);
            powers_.push_back(p);
            p = p * generator % modulus;
        }
        if (p != 1) throw std::logic_error("order of 2^-1 differs from the group order");
    }

    std::size_t level() const noexcept { return level_; }
    std::size_t order() const noexcept { return powers_.size(); }

    /// (2^-1)^i, i taken modulo the group order.
    std::uint64_t power(std::size_t i) const { return powers_[i % powers_.size()]; }

    /// Index i with (2^-1)^i == x, or -1 when x is not a unit.
    std::int64_t log(std::uint64_t x) const {
        return x < index_.size() ? index_[x] : -1;
    }

    const std::vector<std::uint64_t>& powers() const noexcept { return powers_; }

private:
    std::size_t level_;
    std::vector<std::uint64_t> powers_;
    std::vector<std::int32_t> index_;
};

/// Shared, lazily built table for level k. Safe to call concurrently; racing
/// builders produce identical tables and the first insertion wins.
inline const PowerTable& power_table(std::size_t k) {
    static std::mutex mutex;
    static std::map<std::size_t, std::shared_ptr<const PowerTable>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(k); it != cache.end()) return *it->second;
    }
    auto built = std::make_shared<const PowerTable>(k);
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(k, std::move(built));
    return *it->second;
}

/// 2^-i modulo 3^k. At level 0 the convention 2^0_0 = 0 applies.
inline Natural inv2_power(std::size_t i, std::size_t k) {
    if (k == 0) return 0;
    return Natural(power_table(k).power(i));
}

/// The i with x = (2^-1)^i modulo 3^k, 0 <= i < pi_k.
inline std::size_t dlog_inv2(const Residue3k& x) {
    if (!x.is_unit()) {
        throw std::domain_error(to_string(x.value()) + " is not a unit modulo 3^" +
                                std::to_string(x.level()));
    }
    const auto& table = power_table(x.level());
    return static_cast<std::size_t>(table.log(static_cast<std::uint64_t>(x.value())));
}

/// Parity sequence of the unit group at level k > 0: the symbol at position
/// pi_k - 1 - i is the parity of 2^-i.
struct ParitySequence {
    BitString word;
    std::size_t level;
};

inline ParitySequence pi_sequence(std::size_t k) {
    if (k == 0) throw std::domain_error("the parity sequence is defined for k > 0 only");
    const auto& table = power_table(k);
    const std::size_t n = table.order();
    std::string bits(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
        if (table.power(i) & 1U) bits[n - 1 - i] = '1';
    }
    return {BitString(bits), k};
}

}  // namespace collatz
