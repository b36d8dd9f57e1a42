#pragma once

#include <utility>
#include <vector>

#include "treepoly/composition.hpp"
#include "treepoly/polarized.hpp"
#include "treepoly/tree.hpp"

namespace treepoly {

/// Caterpillar pair from a gap-free 0/1 coefficient list p (constant term
/// first) and positive a, b: signatures are the coefficient lists of
/// (a + bx) p(x) and (b + ax) p(x) with 1 added to the first and last entry.
struct EisenstatGordonPair {
    Composition first;
    Composition second;
    Tree first_tree;
    Tree second_tree;
};

bool is_gap_free(const std::vector<int>& p);

/// Throws DomainError for a non-gap-free p or nonpositive a, b.
EisenstatGordonPair eisenstat_gordon(const std::vector<int>& p, int a, int b);

/// The composition beta with C_{p,1} = Cat(1 (.) (beta o (a,b)) (.) 1): the
/// lengths of the runs of ones in p.
Composition eisenstat_gordon_beta(const std::vector<int>& p);

inline constexpr int kFamilyMaxVertices = 22;

/// { cap(beta o A) : beta in switching_class(alpha) }, deduplicated up to
/// isomorphism and returned in canonical form, sorted by canonical code.
/// Throws DomainError when a member would exceed `max_vertices`.
std::vector<Tree> theorem7_family(const Composition& alpha, const PolarizedTree& a,
                                  int max_vertices = kFamilyMaxVertices);

} // namespace treepoly
