#pragma once

#include "treepoly/composition.hpp"
#include "treepoly/tree.hpp"

namespace treepoly {

/// A tree with a distinguished left end and right end (possibly equal).
struct PolarizedTree {
    Tree tree;
    Vertex left = 0;
    Vertex right = 0;

    PolarizedTree() = default;
    /// Throws DomainError when an end is not a vertex of `t`.
    PolarizedTree(Tree t, Vertex l, Vertex r);

    static PolarizedTree single_vertex();
    /// Path 0-1-...-(k-1) with ends 0 and k-1.
    static PolarizedTree path(int k);
};

/// A . B: disjoint union plus the edge R(A) L(B); ends L(A), R(B).
PolarizedTree polarized_concat(const PolarizedTree& a, const PolarizedTree& b);

/// A (.) B: (A . B) with the joining edge near-contracted into R(A). Ends are
/// L(A) and R(B), except that a single-vertex-end B (L(B) = R(B)) leaves the
/// merged vertex as the right end.
PolarizedTree polarized_near_concat(const PolarizedTree& a, const PolarizedTree& b);

/// A (.) A (.) ... (.) A, i >= 1 copies.
PolarizedTree odot_power(const PolarizedTree& a, int i);

/// beta o A = A^(.)b_1 . A^(.)b_2 . ... . A^(.)b_m
PolarizedTree compose_tree(const Composition& beta, const PolarizedTree& a);

/// Adds a pendant leaf at each end (two leaves when the ends coincide),
/// i.e. 1 (.) A (.) 1.
Tree cap(const PolarizedTree& a);

/// Polarized caterpillar of a composition: spine path with a_i - 1 leaves on
/// spine vertex i, ends at the two spine extremes.
PolarizedTree polarized_caterpillar(const Composition& alpha);

} // namespace treepoly
