// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "collatz/collatz_reg.hpp"
#include "support.hpp"

using namespace collatz;
using testing_support::all_parity_vectors;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome ok(std::string detail = {}) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

ParityVector pv(const char* s) { return ParityVector::parse(s); }

Outcome pi_goldens() {
    const char* expected[] = {"01", "000111", "000010010111101101",
                              "000000110010100100010110000111111001101011011101001111"};
    for (std::size_t k = 1; k <= 4; ++k) {
        if (pi_sequence(k).word.str() != expected[k - 1]) return fail("Pi_" + std::to_string(k) + " differs");
    }
    return ok();
}

Outcome power_table_golden() {
    const std::vector<std::uint64_t> expected{1, 14, 7, 17, 22, 11, 19, 23, 25, 26, 13, 20, 10, 5, 16, 8, 4, 2};
    return power_table(3).powers() == expected ? ok() : fail("powers of 14 mod 27 differ");
}

Outcome encoding_goldens() {
    if (encode(pv("dd")).str() != "00") return fail("E(dd)");
    if (encode(pv("ldd")).str() != "101") return fail("E(ldd)");
    if (occurrence(pv("lld"), 0).str() != "(3,5,8,4)") return fail("alpha_0(lld)");
    if (occurrence(pv("ldllld"), 2).str() != "(137,206,103,155,233,350,175)") return fail("alpha_2(ldllld)");
    if (first_occurrence_end(pv("dll")) != 8) return fail("end of dll");
    return ok();
}

Outcome bijection() {
    for (std::size_t n = 0; n <= 12; ++n) {
        std::vector<char> hit(std::size_t{1} << n, 0);
        for (const auto& p : all_parity_vectors(n)) {
            const Natural v = first_occurrence_start(p);
            if (v >= pow2(n)) return fail("start out of range for " + p.str());
            auto& h = hit[v.convert_to<std::size_t>()];
            if (h) return fail("two vectors share start " + to_string(v));
            h = 1;
        }
    }
    return ok("n <= 12");
}

Outcome closed_form_decodings() {
    auto d = [](std::size_t n) { return ParityVector::downs(n); };
    auto l = [](std::size_t n) { return ParityVector::lefts(n); };
    for (std::size_t n = 0; n <= 12; ++n) {
        const BitString one("1");
        if (decode(BitString::zeros(n)) != d(n)) return fail("0^n, n=" + std::to_string(n));
        if (decode(one + BitString::zeros(n)) != d(n) + l(1)) return fail("10^n");
        if (decode(one + BitString::zeros(2 * n) + one) != l(1) + pv("dl").repeat(n) + l(1)) return fail("10^2n1");
        if (decode(one + BitString::zeros(2 * n + 1) + one) != pv("ld").repeat(n + 1) + d(1)) return fail("10^2n+1 1");
        if (decode(BitString("01").repeat(n + 1)) != l(1) + d(1) + d(2 * n)) return fail("(01)^n+1");
        if (decode(BitString::ones(n)) != l(n)) return fail("1^n");
    }
    for (std::size_t n = 0; n <= 14; ++n) {
        for (const auto& p : all_parity_vectors(n)) {
            if (decode(encode(p)) != p) return fail("round trip " + p.str());
        }
    }
    return ok();
}

Outcome backtracing() {
    for (std::size_t n = 0; n <= 10; ++n) {
        for (const auto& p : all_parity_vectors(n)) {
            if (backtrace(to_feasible_vector(p), first_occurrence_end(p)) != Rational(first_occurrence_start(p))) {
                return fail("backtrace of " + p.str());
            }
        }
    }
    return ok();
}

Outcome down_extension() {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const auto& p : all_parity_vectors(n)) {
            const auto k = p.span();
            if (k == 0) continue;
            const auto i0 = dlog_inv2(Residue3k(first_occurrence_end(p), k));
            if (encode(p + ParityVector::downs(pi_length(k))) != rotate_right(pi_sequence(k).word, i0) + encode(p)) {
                return fail("prefix identity fails for " + p.str());
            }
        }
    }
    return ok();
}

Outcome reg3_14() {
    const auto r = build_reg(14, 3);
    const auto branches = metrics(r).branches;
    if (branches != 12) return fail("branches=" + to_string(branches));
    if (!r.is(Regex::Kind::concat) || !r.children()[0].is(Regex::Kind::star) ||
        r.children()[0].child().word().str() != "100001001011110110") {
        return fail("star prefix differs");
    }
    for (const char* y : {"100001000111000111000111000101", "1000010010111101101000010010111100011"}) {
        if (!matches(r, BitString(y))) return fail(std::string("not matched: ") + y);
        if (!forward_check(BitString(y), 14, 3)) return fail(std::string("forward check: ") + y);
    }
    return ok("branches=12");
}

// Regression value for the alphabetic width of reg_4(1).
constexpr unsigned reg4_1_width = 4266;

Outcome reg4_1() {
    const auto m = metrics(build_reg(1, 4));
    const auto again = metrics(build_reg(1, 4));
    const Natural formula = pow2(4) * pow3(6);
    std::ostringstream d;
    d << "branches=" << m.branches << " (expected " << formula << ") star_height=" << m.star_height
      << " width=" << m.alphabetic_width;
    bool pass = true;
    if (m.branches != formula) pass = false;
    if (m.star_height != 1) pass = false;
    if (m.alphabetic_width != again.alphabetic_width || m.alphabetic_width != reg4_1_width) pass = false;
    // Width family 2^k 3^{k(k+1)/2} at k = 4.
    if (m.alphabetic_width > pow2(4) * pow3(10)) pass = false;
    return {pass, d.str()};
}

Outcome oracle_equivalence() {
    std::size_t runs = 0, members = 0, preds = 0;
    auto check = [&](unsigned x, std::size_t k, const Natural& bound) -> std::optional<std::string> {
        const auto rep = cross_validate(x, k, bound, 1);
        ++runs;
        members += rep.members;
        preds += rep.predecessors;
        if (!rep.is_clean()) return rep.to_json().dump();
        return std::nullopt;
    };
    for (std::size_t k = 0; k <= 3; ++k) {
        for (unsigned x = 1; x <= 30; ++x) {
            if (auto bad = check(x, k, pow2(20))) return fail(*bad);
        }
    }
    for (auto [x, k] : {std::pair<unsigned, std::size_t>{14, 3}, {1, 4}}) {
        if (auto bad = check(x, k, pow2(16))) return fail(*bad);
    }
    return ok(std::to_string(runs) + " runs, " + std::to_string(members) + " members, " + std::to_string(preds) +
              " ancestors");
}

Outcome multiples_of_three() {
    for (unsigned x = 0; x <= 99; x += 3) {
        for (std::size_t k = 1; k <= 3; ++k) {
            if (!build_reg(x, k).is(Regex::Kind::empty)) return fail("non-empty reg for " + std::to_string(x));
            if (!pred_brute(x, k, 100000).empty()) return fail("ancestors found for " + std::to_string(x));
        }
    }
    return ok();
}

Outcome leading_zeros() {
    for (std::size_t k = 1; k <= 8; ++k) {
        const auto zeros = pi_sequence(k).word.str().find('1');
        if (zeros != static_cast<std::size_t>(std::floor(k * std::log(3.0) / std::log(2.0)))) {
            return fail("k=" + std::to_string(k));
        }
    }
    return ok();
}

Outcome serialization_round_trip() {
    for (std::size_t k = 0; k <= 3; ++k) {
        for (unsigned x = 0; x < 30; ++x) {
            const auto r = build_reg(x, k);
            const auto back = parse_paper(to_paper(r));
            for (std::size_t reps = 0; reps <= 1; ++reps) {
                if (enumerate(r, reps) != enumerate(back, reps)) {
                    return fail("x=" + std::to_string(x) + " k=" + std::to_string(k));
                }
            }
        }
    }
    return ok();
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"parity sequences Pi_1..Pi_4", pi_goldens},
        {"powers of 2^-1 modulo 27", power_table_golden},
        {"encoding and occurrence goldens", encoding_goldens},
        {"first-occurrence start is a bijection", bijection},
        {"closed-form decodings and round trip", closed_form_decodings},
        {"backtracing reproduces the start", backtracing},
        {"Down-extension prefix identity", down_extension},
        {"reg_3(14) golden", reg3_14},
        {"reg_4(1) golden", reg4_1},
        {"oracle equivalence", oracle_equivalence},
        {"multiples of three", multiples_of_three},
        {"leading zeros of Pi_k", leading_zeros},
        {"text notation round trip", serialization_round_trip},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
        if (!o.detail.empty()) std::cout << " [" << o.detail << "]";
        std::cout << " (" << std::fixed << std::setprecision(3) << secs << " s)\n";
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
