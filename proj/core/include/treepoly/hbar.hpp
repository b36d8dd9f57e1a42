#pragma once

#include "treepoly/composition.hpp"
#include "treepoly/degree_poly.hpp"
#include "treepoly/sparse_poly.hpp"

namespace treepoly {

/// Hbar(alpha) = cleared / (y+z)^denom_exp, with
///   cleared = sum_{gamma >= alpha} y^(l(gamma)-1) z^(l(alpha)-l(gamma)) sum_i x_{gamma_i}
/// over variables y, z, x_1..x_N, and denom_exp = l(alpha) - 1.
struct HbarPoly {
    SparsePoly cleared;
    int denom_exp = 0;
};

inline constexpr int kHbarMaxLength = 20;

/// N defaults to |alpha|. Throws DomainError when l(alpha) > kHbarMaxLength or
/// N < |alpha|.
HbarPoly hbar(const Composition& alpha, int n_vars = 0);

/// Cross-multiplied equality of the represented rational functions.
bool hbar_equal(const HbarPoly& a, const HbarPoly& b);

/// Substitutes x_i -> (y+z)^(i+1) and divides by (y+z)^(l(alpha)-1). The result
/// is uhdp(Cat(1 (.) alpha (.) 1)). Throws Error if the division is not exact.
HdpPoly hbar_specialize(const Composition& alpha);

/// (y+z) C(a.b) == y (C(a) (y+z)^l(b) + C(b) (y+z)^l(a)) + z (y+z) C(a (.) b)
/// for cleared forms C, i.e. the Hbar recurrence with denominators cleared.
bool hbar_recurrence_check(const Composition& a, const Composition& b);

/// Same recurrence for uhdp(Cat(1 (.) alpha (.) 1)), computed from the trees.
bool uhdp_recurrence_check(const Composition& a, const Composition& b);

/// L(alpha) = sum_{gamma >= alpha} prod_i x_{gamma_i}, over x_1..x_N (N = |alpha|).
SparsePoly lpoly(const Composition& alpha);

/// Rebuilds Hbar from an L-polynomial: each monomial prod x_i^m_i fixes the
/// part multiset and length of one coarsening. Variables y, z, x_1..x_N.
HbarPoly hbar_from_lpoly(const SparsePoly& l);

} // namespace treepoly
