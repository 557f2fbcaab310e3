#pragma once

#include <cstddef>
#include <deque>
#include <ostream>
#include <stdexcept>
#include <string>

#include "collatz/collatz.hpp"
#include "collatz/mod3k.hpp"

namespace collatz {

/// Node (p, x, k) of the tree of first occurrences: x is the end of the
/// first occurrence of p and k its span. Nodes are computed on demand.
struct TreeNode {
    ParityVector p;
    Natural x;
    std::size_t k = 0;

    bool operator==(const TreeNode&) const = default;

    /// "(p, x, k)" with p in 'd'/'l' form ("eps" when empty).
    std::string str() const {
        return "(" + (p.empty() ? std::string("eps") : p.str()) + ", " + to_string(x) + ", " +
               std::to_string(k) + ")";
    }
};

inline TreeNode root() { return {ParityVector(), Natural(0), 0}; }

/// (p.Down, T_{0,k}(x), k).
inline TreeNode right_child(const TreeNode& n) {
    return {n.p + Arrow::down, t0k(Residue3k(n.x, n.k)).value(), n.k};
}

/// (p.Left, T_{1,k+1}(x), k+1).
inline TreeNode left_child(const TreeNode& n) {
    return {n.p + Arrow::left, t1k(Residue3k(n.x, n.k)).value(), n.k + 1};
}

/// Same span k and same first-occurrence end.
inline bool kspan_equivalent(const ParityVector& a, const ParityVector& b) {
    if (a.span() != b.span()) return false;
    return first_occurrence_end(a) == first_occurrence_end(b);
}

/// p followed by n * pi_k Down arrows, k = span(p) > 0. The result is
/// k-span equivalent to p and its encoding gains n copies of
/// R^{i0}(Pi_k) in front, i0 being the discrete log of the end of p.
inline ParityVector extend_downs(const ParityVector& p, std::size_t n) {
    const auto k = p.span();
    if (k == 0) throw std::domain_error("extend_downs needs a parity vector with at least one Left arrow");
    return p + ParityVector::downs(n * pi_length(k));
}

/// Calls visit(node, depth) for every node up to the given depth, level by
/// level, left child before right child.
template <typename Visitor>
void breadth_first(std::size_t depth, Visitor&& visit) {
    std::deque<std::pair<TreeNode, std::size_t>> queue;
    queue.emplace_back(root(), 0);
    while (!queue.empty()) {
        auto [node, d] = std::move(queue.front());
        queue.pop_front();
        visit(node, d);
        if (d < depth) {
            queue.emplace_back(left_child(node), d + 1);
            queue.emplace_back(right_child(node), d + 1);
        }
    }
}

/// One line per node, breadth first.
inline void write_tree_text(std::ostream& os, std::size_t depth) {
    breadth_first(depth, [&](const TreeNode& n, std::size_t) { os << n.str() << '\n'; });
}

/// Graphviz rendering; Left edges are solid, Down edges dashed.
inline void write_tree_dot(std::ostream& os, std::size_t depth) {
    os << "digraph alpha_tree {\n  node [shape=box];\n";
    auto id = [](const TreeNode& n) { return "n_" + (n.p.empty() ? std::string("eps") : n.p.str()); };
    breadth_first(depth, [&](const TreeNode& n, std::size_t d) {
        os << "  " << id(n) << " [label=\"" << n.str() << "\"];\n";
        if (d < depth) {
            os << "  " << id(n) << " -> " << id(left_child(n)) << ";\n";
            os << "  " << id(n) << " -> " << id(right_child(n)) << " [style=dashed];\n";
        }
    });
    os << "}\n";
}

}  // namespace collatz
