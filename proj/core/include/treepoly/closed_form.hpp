#pragma once

#include "treepoly/composition.hpp"
#include "treepoly/degree_poly.hpp"

namespace treepoly {

/// gdp(Cat(alpha)) by summing over spine subsets U: each leaf contributes
/// (xz + y) when its spine neighbor is in U and (xy + 1) otherwise.
/// Exponential in the spine length only. Throws DomainError unless alpha is a
/// caterpillar signature.
GdpPoly gdp_cat(const Composition& alpha);

/// hdp(Cat(alpha)) = (n-k) y + sum over spine intervals [i, j] of
/// y^[i>1] y^[j<k] z^(j-i) (y+z)^(sum_{u=i..j} (a_u - 1)).
HdpPoly hdp_cat(const Composition& alpha);

} // namespace treepoly
