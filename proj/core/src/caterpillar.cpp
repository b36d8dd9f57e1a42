#include "treepoly/caterpillar.hpp"
#include "treepoly/polarized.hpp"

namespace treepoly {

namespace {

Tree build_caterpillar(const Composition& alpha)
{
    const int k = alpha.length();
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i)
        edges.emplace_back(i, i + 1);
    int next = k;
    for (int i = 0; i < k; ++i)
        for (int j = 1; j < alpha[static_cast<std::size_t>(i)]; ++j)
            edges.emplace_back(i, next++);
    return Tree(next, std::move(edges));
}

int non_leaf_degree(const Tree& t, Vertex v)
{
    int d = 0;
    for (Vertex u : t.neighbors(v))
        d += t.degree(u) > 1;
    return d;
}

} // namespace

Tree cat(const Composition& alpha)
{
    if (!alpha.is_caterpillar_signature())
        throw DomainError("cat needs first and last parts >= 2, got (" + alpha.to_string() + ")");
    return build_caterpillar(alpha);
}

bool is_caterpillar(const Tree& t)
{
    for (Vertex v = 0; v < t.size(); ++v)
        if (t.degree(v) > 1 && non_leaf_degree(t, v) > 2)
            return false;
    return true;
}

std::vector<Vertex> spine(const Tree& t)
{
    if (t.size() < 3 || !is_caterpillar(t))
        throw TreeError(TreeError::Kind::not_caterpillar, "spine needs a caterpillar with n >= 3");
    Vertex start = -1;
    for (Vertex v = 0; v < t.size() && start < 0; ++v)
        if (t.degree(v) > 1 && non_leaf_degree(t, v) <= 1)
            start = v;
    std::vector<Vertex> path{start};
    Vertex prev = -1, cur = start;
    for (;;) {
        Vertex next = -1;
        for (Vertex u : t.neighbors(cur))
            if (u != prev && t.degree(u) > 1)
                next = u;
        if (next < 0)
            break;
        path.push_back(next);
        prev = cur;
        cur = next;
    }
    return path;
}

Composition signature(const Tree& t)
{
    std::vector<int> parts;
    for (Vertex v : spine(t))
        parts.push_back(t.degree(v) - non_leaf_degree(t, v) + 1);
    return Composition(std::move(parts)).reversal_normalized();
}

PolarizedTree polarized_caterpillar(const Composition& alpha)
{
    if (alpha.empty())
        throw DomainError("polarized caterpillar of the empty composition");
    return PolarizedTree(build_caterpillar(alpha), 0, alpha.length() - 1);
}

} // namespace treepoly
