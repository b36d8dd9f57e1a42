#pragma once

#include <functional>
#include <vector>

#include "treepoly/checked.hpp"
#include "treepoly/degree_poly.hpp"
#include "treepoly/sparse_poly.hpp"
#include "treepoly/tree.hpp"

namespace treepoly {

using StpPoly = SparsePoly;   // over q, r
using SoupPoly = SparsePoly;  // over x, y, z

/// Statistics of one subtree: e(S) edges, d(S) boundary edges, l(S) leaf edges.
struct SubtreeStats {
    int edges = 0;
    int boundary = 0;
    int leaf_edges = 0;
};

/// Enumerates each subtree exactly once (grouped by minimum vertex, grown by
/// include/exclude decisions over a frontier). Statistics are maintained
/// incrementally, O(1) per subtree beyond the frontier bookkeeping.
void for_each_subtree(const Tree& t, const std::function<void(const SubtreeStats&)>& visit);

/// Joint census of subtrees by (e, d, l).
class SubtreeCensus {
public:
    explicit SubtreeCensus(const Tree& t);

    int n() const { return n_; }
    Int count(int edges, int boundary, int leaf_edges) const;
    Int total() const;

    HdpPoly hdp() const;    // sum y^d z^e
    StpPoly stp() const;    // sum q^e r^l
    SoupPoly soup() const;  // sum x^e y^d z^l

private:
    std::size_t index(int e, int d, int l) const;

    int n_;
    std::vector<Int> counts_;
};

StpPoly stp(const Tree& t);
SoupPoly soup(const Tree& t);

/// Number of subtrees (nonempty connected vertex subsets).
Int subtree_count(const Tree& t);

} // namespace treepoly
