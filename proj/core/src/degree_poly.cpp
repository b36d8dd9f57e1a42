#include "treepoly/degree_poly.hpp"

#include "treepoly/subtree_census.hpp"

namespace treepoly {

GdpPoly gdp(const Tree& t)
{
    const int n = t.size();
    std::vector<Vertex> order{0}, parent(static_cast<std::size_t>(n), -1);
    parent[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex u : t.neighbors(order[i]))
            if (parent[static_cast<std::size_t>(u)] < 0) {
                parent[static_cast<std::size_t>(u)] = order[i];
                order.push_back(u);
            }
    const SparsePoly one = SparsePoly::constant(vars::gdp, 1);
    const SparsePoly x = SparsePoly::variable(vars::gdp, "x");
    const SparsePoly y = SparsePoly::variable(vars::gdp, "y");
    const SparsePoly z = SparsePoly::variable(vars::gdp, "z");
    // in[v]: v in A; out[v]: v not in A. Both over the subtree below v.
    std::vector<SparsePoly> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        SparsePoly pin = x, pout = one;
        for (Vertex c : t.neighbors(*it)) {
            const auto ci = static_cast<std::size_t>(c);
            if (parent[ci] != *it || c == 0)
                continue;
            pin *= z * in[ci] + y * out[ci];
            pout *= y * in[ci] + out[ci];
            in[ci] = SparsePoly();
            out[ci] = SparsePoly();
        }
        in[v] = std::move(pin);
        out[v] = std::move(pout);
    }
    return in[0] + out[0];
}

HdpPoly hdp(const Tree& t) { return SubtreeCensus(t).hdp(); }

HdpPoly uhdp(const Tree& t)
{
    return hdp(t) - SparsePoly::variable(vars::hdp, "y") * t.leaf_count();
}

HdpPoly uhdp_recurrence_rhs(const Tree& t, Vertex v, Vertex w)
{
    auto [t1, t2] = split_keep_edge(t, v, w);
    const Tree contracted = near_contract(t, v, w);
    const SparsePoly y = SparsePoly::variable(vars::hdp, "y");
    const SparsePoly z = SparsePoly::variable(vars::hdp, "z");
    return y * (uhdp(t1) + uhdp(t2)) + z * uhdp(contracted);
}

} // namespace treepoly
