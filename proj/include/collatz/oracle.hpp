#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "collatz/bitstring.hpp"
#include "collatz/collatz.hpp"
#include "collatz/engine.hpp"
#include "collatz/numeric.hpp"
#include "collatz/regexgen.hpp"

namespace collatz {

/// Ancestors y <= value_bound of x that reach x with exactly k odd steps,
/// found by searching backwards from x along y -> 2y and, when y = 2 mod 3,
/// y -> (2y - 1)/3.
///
/// Values above the bound are not discarded outright: a trajectory may climb
/// over the bound before coming back down to x. A state v with r odd steps
/// still to undo only leads to ancestors y with y + 1 >= (2/3)^r (v + 1),
/// because doubling never decreases v + 1 and the odd inverse scales it by
/// exactly 2/3. States are dropped once that lower bound exceeds the bound.
inline std::set<Natural> pred_brute(const Natural& x, std::size_t k, const Natural& value_bound) {
    std::set<Natural> found;
    if (x < 0) return found;

    // hopeless(v, r): 2^r (v + 1) > 3^r (bound + 1)
    const Natural limit = value_bound + 1;
    auto hopeless = [&](const Natural& v, std::size_t r) { return pow2(r) * (v + 1) > pow3(r) * limit; };

    std::set<std::pair<Natural, std::size_t>> seen;
    std::deque<std::pair<Natural, std::size_t>> queue;
    auto push = [&](Natural v, std::size_t used) {
        if (hopeless(v, k - used)) return;
        if (seen.emplace(v, used).second) queue.emplace_back(std::move(v), used);
    };
    push(x, 0);

    while (!queue.empty()) {
        auto [v, used] = std::move(queue.front());
        queue.pop_front();
        if (used == k && v <= value_bound) found.insert(v);
        if (v == 0) continue;  // 0 is its own only ancestor
        push(v * 2, used);
        if (used < k && v % 3 == 2) push((v * 2 - 1) / 3, used + 1);
    }
    return found;
}

/// Runs the Collatz map from interpret(w) and accepts at the first point
/// where exactly k odd steps have been taken and the value is x.
inline bool forward_check(const BitString& w, const Natural& x, std::size_t k) {
    Natural v = interpret(w);
    std::size_t odd = 0;
    for (;;) {
        if (odd == k && v == x) return true;
        if (odd > k) return false;
        if (v == 0) return false;  // fixed point, never odd
        // Inside the 1-2 cycle only 1 and 2 are ever reached again.
        if (v <= 2 && x > 2) return false;
        auto step = collatz_step(v);
        if (step.odd) ++odd;
        v = std::move(step.value);
    }
}

/// Result of comparing reg_k(x) with the brute-force predecessor set.
struct CrossReport {
    Natural x;
    std::size_t k = 0;
    Natural value_bound;
    std::size_t reps = 0;

    std::size_t members = 0;       // enumerated words
    std::size_t predecessors = 0;  // size of pred_brute

    std::vector<BitString> soundness_failures;    // members not reaching x in k odd steps
    std::vector<Natural> completeness_failures;   // ancestors not matched
    std::vector<std::pair<BitString, BitString>> bijection_violations;  // distinct words, same value

    bool is_clean() const {
        return soundness_failures.empty() && completeness_failures.empty() && bijection_violations.empty();
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["x"] = to_string(x);
        j["k"] = k;
        j["value_bound"] = to_string(value_bound);
        j["reps"] = reps;
        j["members"] = members;
        j["predecessors"] = predecessors;
        j["clean"] = is_clean();
        auto& s = j["soundness_failures"] = nlohmann::json::array();
        for (const auto& w : soundness_failures) s.push_back(w.str());
        auto& c = j["completeness_failures"] = nlohmann::json::array();
        for (const auto& y : completeness_failures) c.push_back(to_string(y));
        auto& b = j["bijection_violations"] = nlohmann::json::array();
        for (const auto& [u, w] : bijection_violations) b.push_back({u.str(), w.str()});
        return j;
    }
};

namespace detail {

/// flags[i] = pred(i) for i < n, spread over the given number of workers.
/// Each worker owns a strided slice, so the result is independent of scheduling.
template <typename Pred>
std::vector<char> parallel_flags(std::size_t n, unsigned threads, Pred pred) {
    std::vector<char> flags(n, 0);
    const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    auto run = [&](unsigned t) {
        for (std::size_t i = t; i < n; i += workers) flags[i] = pred(i) ? 1 : 0;
    };
    if (workers == 1) {
        run(0);
        return flags;
    }
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run, t);
    }
    return flags;
}

}  // namespace detail

/// Checks reg_k(x) against the Collatz graph: every enumerated member must
/// forward-check, every brute-force ancestor must be matched up to padding,
/// and no two members may denote the same number (for x > 0).
inline CrossReport cross_validate(const Natural& x, std::size_t k, const Natural& value_bound, std::size_t reps,
                                  unsigned threads = 1) {
    CrossReport report{x, k, value_bound, reps};
    const Regex r = build_reg(x, k);

    const auto members = enumerate(r, reps);
    report.members = members.size();
    const auto sound = detail::parallel_flags(members.size(), threads,
                                              [&](std::size_t i) { return forward_check(members[i], x, k); });
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (!sound[i]) report.soundness_failures.push_back(members[i]);
    }

    const auto preds_set = pred_brute(x, k, value_bound);
    const std::vector<Natural> preds(preds_set.begin(), preds_set.end());
    report.predecessors = preds.size();
    const auto matched = detail::parallel_flags(preds.size(), threads,
                                                [&](std::size_t i) { return matches_value(r, preds[i], k); });
    for (std::size_t i = 0; i < preds.size(); ++i) {
        if (!matched[i]) report.completeness_failures.push_back(preds[i]);
    }

    // Every word of reg_0(0) denotes 0, so injectivity only holds for x > 0.
    if (x > 0) {
        std::map<Natural, BitString> by_value;
        for (const auto& w : members) {
            auto [it, inserted] = by_value.emplace(interpret(w), w);
            if (!inserted) report.bijection_violations.emplace_back(it->second, w);
        }
    }
    return report;
}

}  // namespace collatz
