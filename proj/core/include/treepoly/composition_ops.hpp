#pragma once

#include "treepoly/composition.hpp"

namespace treepoly {

Composition concat(const Composition& a, const Composition& b);

/// (a_1, ..., a_k + b_1, ..., b_m); an empty operand is the identity.
Composition near_concat(const Composition& a, const Composition& b);

/// beta (.) beta (.) ... (.) beta, i >= 1 copies.
Composition odot_power(const Composition& beta, int i);

/// alpha o beta = beta^(.)a_1 . beta^(.)a_2 . ... . beta^(.)a_k
Composition compose(const Composition& alpha, const Composition& beta);

/// 1 (.) alpha (.) 1: the signature of the caterpillar attached to alpha.
Composition pad_ones(const Composition& alpha);

} // namespace treepoly
