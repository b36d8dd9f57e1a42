#pragma once

#include "treepoly/composition.hpp"
#include "treepoly/tree.hpp"

namespace treepoly {

/// Cat(a_1, ..., a_k): spine vertices 0..k-1 in order, then spine vertex i's
/// a_i - 1 pendant leaves, in spine order. Requires a caterpillar signature
/// (first and last parts >= 2, or a single part >= 2). Throws DomainError.
Tree cat(const Composition& alpha);

bool is_caterpillar(const Tree& t);

/// Signature of a caterpillar with n >= 3, reversal-normalized. Throws
/// TreeError(not_caterpillar) otherwise.
Composition signature(const Tree& t);

/// The spine path (non-leaf vertices in path order) of a caterpillar with n >= 3.
std::vector<Vertex> spine(const Tree& t);

} // namespace treepoly
