#pragma once

#include "treepoly/sparse_poly.hpp"
#include "treepoly/tree.hpp"

namespace treepoly {

using GdpPoly = SparsePoly;  // over x, y, z
using HdpPoly = SparsePoly;  // over y, z

/// Generalized degree polynomial: sum over A subset V of x^|A| y^d(A) z^e(A),
/// where d counts boundary edges and e internal edges. Computed by a rooted
/// in/out dynamic program; linear in the number of nonzero coefficients.
GdpPoly gdp(const Tree& t);

/// Half-generalized degree polynomial: sum over subtrees S of y^d(S) z^e(S).
HdpPoly hdp(const Tree& t);

/// hdp(T) - leaf_count(T) * y. Defined for every n >= 1 (see Tree::leaf_count).
HdpPoly uhdp(const Tree& t);

} // namespace treepoly

namespace treepoly {

/// Right-hand side of the non-leaf edge recurrence for e = vw, cleared of
/// denominators: y (uhdp(T1') + uhdp(T2')) + z uhdp(T (.) e), where T1', T2' are
/// the two sides of e each keeping e. Equals (y+z) uhdp(T).
HdpPoly uhdp_recurrence_rhs(const Tree& t, Vertex v, Vertex w);

} // namespace treepoly
