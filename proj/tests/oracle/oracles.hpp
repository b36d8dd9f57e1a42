#pragma once

// Brute-force reference implementations. Each one enumerates the defining
// objects directly (edge subsets, vertex subsets, colorings, permutations,
// Pruefer sequences) and shares no code with the engines beyond the Tree and
// SparsePoly containers.

#include "treepoly/canonical.hpp"
#include "treepoly/partition.hpp"
#include "treepoly/sparse_poly.hpp"
#include "treepoly/tree.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using treepoly::Edge;
using treepoly::Int;
using treepoly::Partition;
using treepoly::SparsePoly;
using treepoly::Tree;

inline Int binom(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    std::vector<std::vector<Int>> row(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        row[i].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
    }
    return row[n][k];
}

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n))
    {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v)
    {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// c_lambda by enumerating all 2^(n-1) edge subsets.
inline std::map<Partition, Int> csf_by_edge_subsets(const Tree& t)
{
    const int n = t.size();
    const auto& edges = t.edges();
    const int m = static_cast<int>(edges.size());
    std::map<Partition, Int> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        DisjointSets ds(n);
        int used = 0;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) {
                ds.unite(edges[i].first, edges[i].second);
                ++used;
            }
        std::map<int, int> sizes;
        for (int v = 0; v < n; ++v)
            ++sizes[ds.find(v)];
        std::vector<int> parts;
        for (auto [root, s] : sizes)
            parts.push_back(s);
        out[Partition::from_unsorted(parts)] += (used % 2 == 0) ? 1 : -1;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// Monomial coefficients by enumerating proper colorings with colors 0..n-1
// and keeping those whose color counts read as a partition (count_0 >=
// count_1 >= ... with zeros only at the end). Exponential; n <= 8.
inline std::map<Partition, Int> csf_monomial_by_colorings(const Tree& t)
{
    const int n = t.size();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    std::map<Partition, Int> out;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            std::vector<int> parts;
            for (int c = 0; c < n; ++c) {
                if (c > 0 && count[c] > count[c - 1])
                    return;
                if (count[c] > 0)
                    parts.push_back(count[c]);
            }
            out[Partition(parts)] += 1;
            return;
        }
        for (int c = 0; c < n; ++c) {
            bool ok = true;
            for (auto u : t.neighbors(v))
                if (u < v && color[u] == c)
                    ok = false;
            if (!ok)
                continue;
            color[v] = c;
            ++count[c];
            self(self, v + 1);
            --count[c];
        }
        color[v] = -1;
    };
    rec(rec, 0);
    return out;
}

struct SubsetStats {
    int size = 0;
    int boundary = 0;    // edges with exactly one endpoint inside
    int internal = 0;    // edges with both endpoints inside
    int leaf_edges = 0;  // internal edges with an endpoint of inside-degree 1
    bool connected = false;
};

inline SubsetStats subset_stats(const Tree& t, std::uint32_t mask)
{
    SubsetStats s;
    const int n = t.size();
    std::vector<int> inner_deg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : t.edges()) {
        bool iu = mask & (1u << u), iv = mask & (1u << v);
        if (iu && iv) {
            ++s.internal;
            ++inner_deg[u];
            ++inner_deg[v];
        } else if (iu || iv) {
            ++s.boundary;
        }
    }
    for (auto [u, v] : t.edges())
        if ((mask & (1u << u)) && (mask & (1u << v)) && (inner_deg[u] == 1 || inner_deg[v] == 1))
            ++s.leaf_edges;
    s.size = __builtin_popcount(mask);
    if (s.size == 0)
        return s;
    // reachability inside the subset
    int start = __builtin_ctz(mask);
    std::uint32_t seen = 1u << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto u : t.neighbors(v))
            if ((mask & (1u << u)) && !(seen & (1u << u))) {
                seen |= 1u << u;
                stack.push_back(u);
            }
    }
    s.connected = (seen == mask);
    return s;
}

inline SparsePoly gdp_by_subsets(const Tree& t)
{
    SparsePoly p(treepoly::vars::gdp);
    for (std::uint32_t mask = 0; mask < (1u << t.size()); ++mask) {
        auto s = subset_stats(t, mask);
        int e[3] = {s.size, s.boundary, s.internal};
        p.add_term(e, 1);
    }
    return p;
}

template <class Visit>
void for_each_connected_subset(const Tree& t, Visit visit)
{
    for (std::uint32_t mask = 1; mask < (1u << t.size()); ++mask) {
        auto s = subset_stats(t, mask);
        if (s.connected)
            visit(s);
    }
}

inline SparsePoly hdp_by_subsets(const Tree& t)
{
    SparsePoly p(treepoly::vars::hdp);
    for_each_connected_subset(t, [&](const SubsetStats& s) {
        int e[2] = {s.boundary, s.internal};
        p.add_term(e, 1);
    });
    return p;
}

inline SparsePoly stp_by_subsets(const Tree& t)
{
    SparsePoly p(treepoly::vars::stp);
    for_each_connected_subset(t, [&](const SubsetStats& s) {
        int e[2] = {s.internal, s.leaf_edges};
        p.add_term(e, 1);
    });
    return p;
}

inline SparsePoly soup_by_subsets(const Tree& t)
{
    SparsePoly p(treepoly::vars::soup);
    for_each_connected_subset(t, [&](const SubsetStats& s) {
        int e[3] = {s.internal, s.boundary, s.leaf_edges};
        p.add_term(e, 1);
    });
    return p;
}

inline Int subtree_count_by_subsets(const Tree& t)
{
    Int c = 0;
    for_each_connected_subset(t, [&](const SubsetStats&) { ++c; });
    return c;
}

// Tries every vertex bijection.
inline bool isomorphic_by_permutation(const Tree& a, const Tree& b)
{
    if (a.size() != b.size())
        return false;
    std::set<Edge> target;
    for (auto [u, v] : b.edges())
        target.insert({std::min(u, v), std::max(u, v)});
    std::vector<int> perm(static_cast<std::size_t>(a.size()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges()) {
            int pu = perm[u], pv = perm[v];
            if (!target.count({std::min(pu, pv), std::max(pu, pv)})) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Tree tree_from_pruefer(int n, const std::vector<int>& seq)
{
    if (n == 1)
        return Tree();
    if (n == 2)
        return Tree(2, {{0, 1}});
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int x : seq)
        ++deg[x];
    std::vector<Edge> edges;
    for (int x : seq) {
        int leaf = 0;
        while (deg[leaf] != 1)
            ++leaf;
        edges.push_back({leaf, x});
        --deg[leaf];
        --deg[x];
    }
    int u = -1, w = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1)
            (u < 0 ? u : w) = v;
    edges.push_back({u, w});
    return Tree(n, edges);
}

// Every labeled tree on n vertices, n^(n-2) of them.
template <class Visit>
void for_each_labeled_tree(int n, Visit visit)
{
    if (n <= 2) {
        visit(tree_from_pruefer(n, {}));
        return;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        visit(tree_from_pruefer(n, seq));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1)
            seq[i--] = 0;
        if (i < 0)
            break;
        ++seq[i];
    }
}

inline std::size_t free_tree_count_by_pruefer(int n)
{
    std::set<treepoly::CanonicalCode> codes;
    for_each_labeled_tree(n, [&](const Tree& t) { codes.insert(treepoly::canonical_code(t)); });
    return codes.size();
}

// omega summed literally over index subsets I of lambda's parts: a
// sub-multiset mu is hit exactly C(lambda; mu) times.
inline Int omega_literal(const Partition& lambda, int n, int a, int b, int c)
{
    const auto& parts = lambda.parts();
    const int len = lambda.length();
    Int total = 0;
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
        int sum = 0, cnt = 0;
        for (int i = 0; i < len; ++i)
            if (mask & (1u << i)) {
                sum += parts[i];
                ++cnt;
            }
        if (sum != a)
            continue;
        total += binom(a - cnt, c) * binom(n - len + cnt - a, n - b - c - 1);
    }
    return ((n - b - 1) % 2 == 0) ? total : -total;
}

// Product by explicit term-pair convolution.
inline SparsePoly multiply_by_convolution(const SparsePoly& a, const SparsePoly& b)
{
    std::map<std::vector<int>, Int> acc;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            std::vector<int> e(a.arity());
            for (std::size_t i = 0; i < a.arity(); ++i)
                e[i] = ea[i] + eb[i];
            acc[e] += ca * cb;
        }
    SparsePoly out(a.vars());
    for (const auto& [e, c] : acc)
        out.add_term(e, c);
    return out;
}

// Coarsenings as the compositions of |alpha| whose partial sums are all
// partial sums of alpha.
inline std::set<std::vector<int>> coarsenings_by_partial_sums(const std::vector<int>& alpha)
{
    std::set<int> sums;
    int run = 0;
    for (int p : alpha)
        sums.insert(run += p);
    const int total = run;
    std::set<std::vector<int>> out;
    auto rec = [&](auto&& self, int at, std::vector<int>& cur) -> void {
        if (at == total) {
            out.insert(cur);
            return;
        }
        for (int next = at + 1; next <= total; ++next)
            if (sums.count(next)) {
                cur.push_back(next - at);
                self(self, next, cur);
                cur.pop_back();
            }
    };
    std::vector<int> cur;
    rec(rec, 0, cur);
    return out;
}

// Counts of vertices by degree straight from the edge list.
inline std::vector<Int> degree_counts(const Tree& t)
{
    std::vector<int> deg(static_cast<std::size_t>(t.size()), 0);
    for (auto [u, v] : t.edges()) {
        ++deg[u];
        ++deg[v];
    }
    std::vector<Int> out(static_cast<std::size_t>(t.size()), 0);
    for (int d : deg)
        ++out[d];
    return out;
}

} // namespace oracle
