// collatz-reg: command-line front end to the library.
//
// Exit status: 0 on success (and "yes" answers), 1 on domain errors and "no"
// answers, 2 on usage errors.

#include <cstddef>
#include <iostream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "collatz/collatz_reg.hpp"

using namespace collatz;
using nlohmann::json;

namespace {

constexpr int exit_no = 1;

std::size_t parse_small(const std::string& text, const char* what) {
    const Natural n = parse_natural(text);
    if (n > std::numeric_limits<std::size_t>::max() / 4) {
        throw std::domain_error(std::string(what) + " too large: " + text);
    }
    return n.convert_to<std::size_t>();
}

int answer(bool yes, bool as_json) {
    if (as_json) {
        std::cout << json{{"match", yes}}.dump() << '\n';
    } else {
        std::cout << (yes ? "yes" : "no") << '\n';
    }
    return yes ? 0 : exit_no;
}

// Arguments of the subcommands, kept as strings so that malformed numbers are
// reported as domain errors rather than usage errors.
struct Args {
    std::string x, k, bits, y, dl, index, level;
    std::string format = "paper";
    bool metrics = false, dot = false;
    std::size_t reps = 1, count = 10, depth = 3;
    std::string max = "1000";
    unsigned threads = 1;
};

void add_xk(CLI::App* cmd, Args& a) {
    cmd->add_option("x", a.x, "target value")->required();
    cmd->add_option("k", a.k, "number of odd steps")->required();
}

void print_metrics(const RegexMetrics& m) {
    std::cout << "branches=" << m.branches << " alphabetic_width=" << m.alphabetic_width
              << " star_height=" << m.star_height << '\n';
}

int run_gen(const Args& a, bool as_json) {
    const auto r = build_reg(parse_natural(a.x), parse_small(a.k, "k"));
    if (as_json) {
        json j{{"x", a.x}, {"k", parse_small(a.k, "k")}};
        if (a.format == "tree") {
            std::ostringstream os;
            write_tree_json(os, r);
            j["tree"] = json::parse(os.str());
        } else {
            j["regex"] = to_paper(r);
        }
        if (a.metrics) {
            const auto m = metrics(r);
            j["metrics"] = {{"branches", to_string(m.branches)},
                            {"alphabetic_width", to_string(m.alphabetic_width)},
                            {"star_height", m.star_height}};
        }
        std::cout << j.dump() << '\n';
        return 0;
    }
    if (a.format == "tree") {
        write_tree_json(std::cout, r);
    } else {
        write_paper(std::cout, r);
    }
    std::cout << '\n';
    if (a.metrics) print_metrics(metrics(r));
    return 0;
}

int run_sample(const Args& a, bool as_json) {
    const auto words = enumerate(build_reg(parse_natural(a.x), parse_small(a.k, "k")), a.reps);
    const std::size_t n = std::min(a.count, words.size());
    if (as_json) {
        json list = json::array();
        for (std::size_t i = 0; i < n; ++i) list.push_back(words[i].str());
        std::cout << json{{"reps", a.reps}, {"words", list}}.dump() << '\n';
        return 0;
    }
    for (std::size_t i = 0; i < n; ++i) std::cout << to_cli_string(words[i]) << '\n';
    return 0;
}

int run_smallest(const Args& a, bool as_json) {
    const auto best = smallest_ancestor(parse_natural(a.x), parse_small(a.k, "k"), a.reps);
    if (as_json) {
        json j{{"reps", a.reps}, {"value", nullptr}, {"word", nullptr}};
        if (best) {
            j["value"] = to_string(best->value);
            j["word"] = best->word.str();
        }
        std::cout << j.dump() << '\n';
    } else if (best) {
        std::cout << best->value << " (word " << to_cli_string(best->word) << ", reps " << a.reps << ")\n";
    } else {
        std::cout << "none (reps " << a.reps << ")\n";
    }
    return 0;
}

int run_verify(const Args& a, bool as_json) {
    const auto report = cross_validate(parse_natural(a.x), parse_small(a.k, "k"), parse_natural(a.max), a.reps,
                                       std::max(1U, a.threads));
    if (as_json) {
        std::cout << report.to_json().dump() << '\n';
        return report.is_clean() ? 0 : exit_no;
    }
    std::cout << (report.is_clean() ? "clean" : "MISMATCH") << ": members=" << report.members
              << " ancestors=" << report.predecessors << " (x=" << report.x << " k=" << report.k
              << " max=" << report.value_bound << " reps=" << report.reps << ")\n";
    for (const auto& w : report.soundness_failures) std::cout << "unsound member " << w << '\n';
    for (const auto& y : report.completeness_failures) std::cout << "unmatched ancestor " << y << '\n';
    for (const auto& [u, w] : report.bijection_violations) std::cout << "same value: " << u << " " << w << '\n';
    return report.is_clean() ? 0 : exit_no;
}

int run_pred(const Args& a, bool as_json) {
    const auto found = pred_brute(parse_natural(a.x), parse_small(a.k, "k"), parse_natural(a.max));
    if (as_json) {
        json list = json::array();
        for (const auto& y : found) list.push_back(to_string(y));
        std::cout << json{{"ancestors", list}}.dump() << '\n';
        return 0;
    }
    bool first = true;
    for (const auto& y : found) {
        std::cout << (first ? "" : " ") << y;
        first = false;
    }
    std::cout << '\n';
    return 0;
}

int run_tree(const Args& a, bool as_json) {
    if (a.dot) {
        write_tree_dot(std::cout, a.depth);
    } else if (as_json) {
        json nodes = json::array();
        breadth_first(a.depth, [&](const TreeNode& n, std::size_t d) {
            nodes.push_back({{"p", n.p.empty() ? "eps" : n.p.str()}, {"x", to_string(n.x)}, {"k", n.k}, {"depth", d}});
        });
        std::cout << nodes.dump() << '\n';
    } else {
        write_tree_text(std::cout, a.depth);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regular expressions for Collatz ancestors at a fixed number of odd steps"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    Args a;
    auto* gen = app.add_subcommand("gen", "print reg_k(x)");
    add_xk(gen, a);
    gen->add_option("--format", a.format, "paper or tree")->check(CLI::IsMember({"paper", "tree"}));
    gen->add_flag("--metrics", a.metrics, "also print branch count, alphabetic width and star height");

    auto* match = app.add_subcommand("match", "is a bit string in reg_k(x)?");
    add_xk(match, a);
    match->add_option("bits", a.bits, "bit string, or eps")->required();

    auto* matchval = app.add_subcommand("matchval", "is y, up to leading zeros, in reg_k(x)?");
    add_xk(matchval, a);
    matchval->add_option("y", a.y, "candidate ancestor")->required();

    auto* sample = app.add_subcommand("sample", "first members in length-lexicographic order");
    add_xk(sample, a);
    sample->add_option("--reps", a.reps, "star repetitions")->capture_default_str();
    sample->add_option("--count", a.count, "number of members")->capture_default_str();

    auto* smallest = app.add_subcommand("smallest", "smallest ancestor within a star bound");
    add_xk(smallest, a);
    smallest->add_option("--reps", a.reps, "star repetitions")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "cross-check reg_k(x) against brute force");
    add_xk(verify, a);
    verify->add_option("--max", a.max, "largest ancestor searched")->capture_default_str();
    verify->add_option("--reps", a.reps, "star repetitions")->capture_default_str();
    verify->add_option("--threads", a.threads, "worker threads")->capture_default_str();

    auto* pred = app.add_subcommand("pred", "ancestors by backward search");
    add_xk(pred, a);
    pred->add_option("--max", a.max, "largest ancestor reported")->capture_default_str();

    auto* pi = app.add_subcommand("pi", "parity sequence of the units modulo 3^k");
    pi->add_option("k", a.level, "level")->required();

    auto* dlog = app.add_subcommand("dlog", "discrete log of x base 2^-1 modulo 3^k");
    dlog->add_option("x", a.x, "unit residue")->required();
    dlog->add_option("k", a.level, "level")->required();

    auto* enc = app.add_subcommand("encode", "encoding of a parity vector ('d'/'l')");
    enc->add_option("dl", a.dl, "parity vector, or eps")->required();

    auto* dec = app.add_subcommand("decode", "parity vector of a bit string");
    dec->add_option("bits", a.bits, "bit string, or eps")->required();

    auto* tree = app.add_subcommand("tree", "first levels of the tree of first occurrences");
    tree->add_option("--depth", a.depth, "depth")->capture_default_str();
    tree->add_flag("--dot", a.dot, "Graphviz output");

    auto* occ = app.add_subcommand("occ", "i-th occurrence of a parity vector");
    occ->add_option("dl", a.dl, "parity vector, or eps")->required();
    occ->add_option("i", a.index, "occurrence index")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(a, as_json);
        if (match->parsed()) {
            const auto r = build_reg(parse_natural(a.x), parse_small(a.k, "k"));
            return answer(matches(r, parse_cli_bits(a.bits)), as_json);
        }
        if (matchval->parsed()) {
            const auto k = parse_small(a.k, "k");
            return answer(matches_value(build_reg(parse_natural(a.x), k), parse_natural(a.y), k), as_json);
        }
        if (sample->parsed()) return run_sample(a, as_json);
        if (smallest->parsed()) return run_smallest(a, as_json);
        if (verify->parsed()) return run_verify(a, as_json);
        if (pred->parsed()) return run_pred(a, as_json);
        if (pi->parsed()) {
            const auto k = parse_small(a.level, "k");
            const auto word = pi_sequence(k).word;
            if (as_json) {
                std::cout << json{{"k", k}, {"pi", word.str()}}.dump() << '\n';
            } else {
                std::cout << word << '\n';
            }
            return 0;
        }
        if (dlog->parsed()) {
            const auto k = parse_small(a.level, "k");
            const auto i = dlog_inv2(Residue3k(parse_natural(a.x), k));
            if (as_json) {
                std::cout << json{{"x", a.x}, {"k", k}, {"log", i}}.dump() << '\n';
            } else {
                std::cout << i << '\n';
            }
            return 0;
        }
        if (enc->parsed()) {
            const auto w = encode(ParityVector::parse(a.dl));
            if (as_json) {
                std::cout << json{{"bits", w.str()}}.dump() << '\n';
            } else {
                std::cout << to_cli_string(w) << '\n';
            }
            return 0;
        }
        if (dec->parsed()) {
            const auto p = decode(parse_cli_bits(a.bits));
            if (as_json) {
                std::cout << json{{"parity_vector", p.str()}}.dump() << '\n';
            } else {
                std::cout << p << '\n';
            }
            return 0;
        }
        if (tree->parsed()) return run_tree(a, as_json);
        if (occ->parsed()) {
            const auto o = occurrence(ParityVector::parse(a.dl), parse_natural(a.index));
            if (as_json) {
                json values = json::array();
                for (const auto& v : o.values) values.push_back(to_string(v));
                std::cout << json{{"index", a.index}, {"values", values}}.dump() << '\n';
            } else {
                std::cout << o.str() << '\n';
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
