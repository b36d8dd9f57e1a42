#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treepoly/error.hpp"

namespace treepoly {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class TreeError : public Error {
public:
    enum class Kind {
        parse,          // malformed line or token
        bad_label,      // negative label, or label >= declared n
        self_loop,
        duplicate_edge,
        cycle,
        disconnected,
        not_an_edge,    // near_contract on a non-edge
        leaf_edge,      // near_contract on a leaf edge
        not_caterpillar,
    };

    TreeError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

const char* to_string(TreeError::Kind kind);

/// A labeled tree on vertices 0..n-1. Construction validates the edge list,
/// after which the value is immutable.
class Tree {
public:
    /// The single-vertex tree.
    Tree();

    /// Throws TreeError for self-loops, duplicate edges, labels outside
    /// 0..n-1, cycles and disconnected vertex sets.
    Tree(int n, std::vector<Edge> edges);

    int size() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    /// Number of degree-1 vertices; 0 for the single vertex, 2 for the single edge.
    int leaf_count() const;
    std::vector<int> degree_sequence() const;  // count of vertices by degree

    /// Edges sorted with u < v, in lexicographic order.
    std::vector<Edge> sorted_edges() const;

    /// "u v" per line, preceded by "n=K".
    std::string to_edge_list() const;

private:
    int n_ = 1;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Parses the edge-list format: optional "n=K" first line, then one "u v" pair
/// per line. Blank lines and lines starting with '#' are skipped. Without an
/// "n=" line the vertex count is one more than the largest label.
Tree parse_tree(std::string_view text);

/// Reads and parses a file. Throws DomainError when it cannot be opened.
Tree read_tree_file(const std::string& path);

/// T with edge vw near-contracted into v: every other neighbor of w is moved
/// to v and w is left as a leaf hanging off v. Labels are preserved.
/// Throws TreeError (not_an_edge, leaf_edge).
Tree near_contract(const Tree& t, Vertex v, Vertex w);

/// Deleting edge vw splits t into T1 (containing v) and T2 (containing w).
/// Returns T1 + vw and T2 + vw, relabeled so that v (resp. w) is vertex 0
/// and the opposite endpoint is vertex 1.
std::pair<Tree, Tree> split_keep_edge(const Tree& t, Vertex v, Vertex w);

/// Disjoint union of a and b (b shifted by a.size()) plus the edge (u, b_v + a.size()).
Tree join(const Tree& a, Vertex u, const Tree& b, Vertex b_v);

/// Adds a new leaf adjacent to v; the leaf gets label size().
Tree add_leaf(const Tree& t, Vertex v);

} // namespace treepoly
