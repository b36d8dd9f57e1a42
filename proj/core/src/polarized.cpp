#include "treepoly/polarized.hpp"

namespace treepoly {

PolarizedTree::PolarizedTree(Tree t, Vertex l, Vertex r) : tree(std::move(t)), left(l), right(r)
{
    if (l < 0 || r < 0 || l >= tree.size() || r >= tree.size())
        throw DomainError("polarized tree end is not a vertex");
}

PolarizedTree PolarizedTree::single_vertex() { return PolarizedTree(Tree(), 0, 0); }

PolarizedTree PolarizedTree::path(int k)
{
    if (k < 1)
        throw DomainError("path needs k >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i)
        edges.emplace_back(i, i + 1);
    return PolarizedTree(Tree(k, std::move(edges)), 0, k - 1);
}

PolarizedTree polarized_concat(const PolarizedTree& a, const PolarizedTree& b)
{
    return PolarizedTree(join(a.tree, a.right, b.tree, b.left), a.left, b.right + a.tree.size());
}

PolarizedTree polarized_near_concat(const PolarizedTree& a, const PolarizedTree& b)
{
    const int off = a.tree.size();
    const Vertex v = a.right;
    const Vertex w = b.left + off;
    // Near-contraction of the joining edge; the degree precondition is not
    // needed here since either end may be a single vertex.
    std::vector<Edge> edges = a.tree.edges();
    for (auto [x, y] : b.tree.edges()) {
        x += off;
        y += off;
        edges.emplace_back(x == w ? v : x, y == w ? v : y);
    }
    edges.emplace_back(v, w);
    const Vertex right = b.left == b.right ? v : b.right + off;
    return PolarizedTree(Tree(off + b.tree.size(), std::move(edges)), a.left, right);
}

PolarizedTree odot_power(const PolarizedTree& a, int i)
{
    if (i < 1)
        throw DomainError("odot_power needs i >= 1");
    PolarizedTree r = a;
    for (int j = 1; j < i; ++j)
        r = polarized_near_concat(r, a);
    return r;
}

PolarizedTree compose_tree(const Composition& beta, const PolarizedTree& a)
{
    if (beta.empty())
        throw DomainError("compose_tree needs a nonempty composition");
    PolarizedTree r = odot_power(a, beta[0]);
    for (int j = 1; j < beta.length(); ++j)
        r = polarized_concat(r, odot_power(a, beta[static_cast<std::size_t>(j)]));
    return r;
}

Tree cap(const PolarizedTree& a) { return add_leaf(add_leaf(a.tree, a.left), a.right); }

} // namespace treepoly
