#pragma once

#include <cstddef>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "collatz/bitstring.hpp"
#include "collatz/numeric.hpp"

namespace collatz {

/// Immutable regular expression over {0,1}:
///
///   reg := empty | (w) | alt(reg, ...) | concat(reg, ...) | star(reg)
///
/// where literals hold whole words (possibly the empty word). Handles share
/// their subtrees, so a generated expression is a DAG even though its
/// language and serialization are those of the expanded tree.
class Regex {
public:
    enum class Kind { empty, literal, alt, concat, star };

    static Regex empty_language() { return Regex(std::make_shared<const Node>(Node{Kind::empty, {}, {}})); }
    static Regex literal(BitString w) {
        return Regex(std::make_shared<const Node>(Node{Kind::literal, std::move(w), {}}));
    }
    static Regex alt(std::vector<Regex> children) {
        return Regex(std::make_shared<const Node>(Node{Kind::alt, {}, std::move(children)}));
    }
    static Regex concat(std::vector<Regex> children) {
        return Regex(std::make_shared<const Node>(Node{Kind::concat, {}, std::move(children)}));
    }
    static Regex star(Regex child) {
        return Regex(std::make_shared<const Node>(Node{Kind::star, {}, {std::move(child)}}));
    }

    Kind kind() const noexcept { return node_->kind; }
    bool is(Kind k) const noexcept { return node_->kind == k; }

    /// Word of a literal node.
    const BitString& word() const { return node_->word; }
    const std::vector<Regex>& children() const noexcept { return node_->children; }
    const Regex& child() const { return node_->children.front(); }

    /// Identity of the shared node; equal ids imply equal expressions.
    const void* id() const noexcept { return node_.get(); }

    /// Structural equality.
    friend bool operator==(const Regex& a, const Regex& b) {
        if (a.node_ == b.node_) return true;
        if (a.kind() != b.kind() || a.word() != b.word()) return false;
        return a.children() == b.children();
    }

private:
    struct Node {
        Kind kind;
        BitString word;
        std::vector<Regex> children;
    };

    explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

inline const char* kind_name(Regex::Kind k) {
    switch (k) {
        case Regex::Kind::empty: return "empty";
        case Regex::Kind::literal: return "literal";
        case Regex::Kind::alt: return "alt";
        case Regex::Kind::concat: return "concat";
        case Regex::Kind::star: return "star";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Text notation
//
// Literals are written in parentheses, "(01)", with "()" for the empty word.
// Alternatives are each parenthesized and separated by '|'. In a
// concatenation, literals and non-final starred factors are written as they
// are; every other factor is grouped, which reproduces the "(join)(b)(reg)"
// layout of the generated expressions. The empty language is "∅".
// ---------------------------------------------------------------------------

namespace detail {

inline void write_paper(std::ostream& os, const Regex& r);

inline void write_grouped(std::ostream& os, const Regex& r) {
    os << '(';
    write_paper(os, r);
    os << ')';
}

inline void write_paper(std::ostream& os, const Regex& r) {
    using K = Regex::Kind;
    switch (r.kind()) {
        case K::empty: os << "∅"; break;
        case K::literal: os << '(' << r.word() << ')'; break;
        case K::star:
            if (r.child().is(K::literal)) {
                write_paper(os, r.child());
            } else {
                write_grouped(os, r.child());
            }
            os << '*';
            break;
        case K::alt: {
            bool first = true;
            for (const auto& c : r.children()) {
                if (!first) os << '|';
                first = false;
                write_grouped(os, c);
            }
            break;
        }
        case K::concat: {
            const auto& cs = r.children();
            for (std::size_t i = 0; i < cs.size(); ++i) {
                const bool last = i + 1 == cs.size();
                const bool bare = cs[i].is(K::literal) || cs[i].is(K::empty) || (cs[i].is(K::star) && !last);
                if (bare) {
                    write_paper(os, cs[i]);
                } else {
                    write_grouped(os, cs[i]);
                }
            }
            if (cs.empty()) os << "()";
            break;
        }
    }
}

}  // namespace detail

/// Streams the text notation without building the whole string.
inline void write_paper(std::ostream& os, const Regex& r) { detail::write_paper(os, r); }

inline std::string to_paper(const Regex& r) {
    std::ostringstream os;
    write_paper(os, r);
    return os.str();
}

/// Parser for the text notation. Groups do not create nodes; a
/// parenthesized word of 0/1 symbols is a literal.
class PaperParser {
public:
    explicit PaperParser(std::string_view text) : text_(text) {}

    Regex parse() {
        Regex r = parse_alt();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

private:
    static constexpr std::string_view empty_symbol = "∅";

    Regex parse_alt() {
        std::vector<Regex> branches{parse_concat()};
        while (peek() == '|') {
            ++pos_;
            branches.push_back(parse_concat());
        }
        return branches.size() == 1 ? std::move(branches.front()) : Regex::alt(std::move(branches));
    }

    Regex parse_concat() {
        std::vector<Regex> factors;
        while (pos_ < text_.size() && (peek() == '(' || text_.substr(pos_).starts_with(empty_symbol))) {
            factors.push_back(parse_factor());
        }
        if (factors.empty()) fail("expected '(' or '∅'");
        return factors.size() == 1 ? std::move(factors.front()) : Regex::concat(std::move(factors));
    }

    Regex parse_factor() {
        Regex r = parse_atom();
        while (peek() == '*') {
            ++pos_;
            r = Regex::star(std::move(r));
        }
        return r;
    }

    Regex parse_atom() {
        if (text_.substr(pos_).starts_with(empty_symbol)) {
            pos_ += empty_symbol.size();
            return Regex::empty_language();
        }
        expect('(');
        std::size_t end = pos_;
        while (end < text_.size() && (text_[end] == '0' || text_[end] == '1')) ++end;
        if (end < text_.size() && text_[end] == ')') {
            Regex lit = Regex::literal(BitString(text_.substr(pos_, end - pos_)));
            pos_ = end + 1;
            return lit;
        }
        Regex inner = parse_alt();
        expect(')');
        return inner;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("regex parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline Regex parse_paper(std::string_view text) { return PaperParser(text).parse(); }

// ---------------------------------------------------------------------------
// Tree format (JSON): {"kind": "concat", "children": [...]},
// {"kind": "literal", "bits": "01"}, {"kind": "star", "child": {...}},
// {"kind": "empty"}.
// ---------------------------------------------------------------------------

/// Streams the tree format; subtrees shared in memory are written out in full.
inline void write_tree_json(std::ostream& os, const Regex& r) {
    using K = Regex::Kind;
    os << "{\"kind\":\"" << kind_name(r.kind()) << '"';
    switch (r.kind()) {
        case K::empty: break;
        case K::literal: os << ",\"bits\":\"" << r.word() << '"'; break;
        case K::star:
            os << ",\"child\":";
            write_tree_json(os, r.child());
            break;
        case K::alt:
        case K::concat: {
            os << ",\"children\":[";
            bool first = true;
            for (const auto& c : r.children()) {
                if (!first) os << ',';
                first = false;
                write_tree_json(os, c);
            }
            os << ']';
            break;
        }
    }
    os << '}';
}

inline Regex regex_from_json(const nlohmann::json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "empty") return Regex::empty_language();
    if (kind == "literal") return Regex::literal(BitString(j.at("bits").get<std::string>()));
    if (kind == "star") return Regex::star(regex_from_json(j.at("child")));
    if (kind == "alt" || kind == "concat") {
        std::vector<Regex> children;
        for (const auto& c : j.at("children")) children.push_back(regex_from_json(c));
        return kind == "alt" ? Regex::alt(std::move(children)) : Regex::concat(std::move(children));
    }
    throw std::invalid_argument("unknown regex node kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Metrics
// ---------------------------------------------------------------------------

struct RegexMetrics {
    Natural branches;          // alternation leaves of the expanded tree
    Natural alphabetic_width;  // number of 0/1 symbols in the expanded tree
    std::size_t star_height = 0;
};

namespace detail {

class MetricsCollector {
public:
    RegexMetrics of(const Regex& r) {
        if (auto it = memo_.find(r.id()); it != memo_.end()) return it->second;
        using K = Regex::Kind;
        RegexMetrics m;
        switch (r.kind()) {
            case K::empty: m.branches = 0; m.alphabetic_width = 0; break;
            case K::literal: m.branches = 1; m.alphabetic_width = r.word().size(); break;
            case K::star: {
                const auto c = of(r.child());
                m = c;
                m.star_height = c.star_height + 1;
                break;
            }
            case K::alt:
                m.branches = 0;
                m.alphabetic_width = 0;
                for (const auto& child : r.children()) {
                    const auto c = of(child);
                    m.branches += c.branches;
                    m.alphabetic_width += c.alphabetic_width;
                    m.star_height = std::max(m.star_height, c.star_height);
                }
                break;
            case K::concat:
                m.branches = 1;
                m.alphabetic_width = 0;
                for (const auto& child : r.children()) {
                    const auto c = of(child);
                    m.branches *= c.branches;
                    m.alphabetic_width += c.alphabetic_width;
                    m.star_height = std::max(m.star_height, c.star_height);
                }
                break;
        }
        memo_.emplace(r.id(), m);
        return m;
    }

private:
    std::unordered_map<const void*, RegexMetrics> memo_;
};

}  // namespace detail

/// Branch count (product over concatenations, sum over alternations),
/// alphabetic width and star height. Linear in the number of shared nodes.
inline RegexMetrics metrics(const Regex& r) { return detail::MetricsCollector{}.of(r); }

}  // namespace collatz
