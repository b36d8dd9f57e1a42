#pragma once

#include <set>
#include <vector>

#include "treepoly/composition.hpp"

namespace treepoly {

/// alpha = factors[0] o factors[1] o ... o factors[k-1]
struct Factorization {
    std::vector<Composition> factors;

    Composition compose_all() const;
    std::string to_string() const;  // "(1,2) o (1,2)"
};

/// True when no factor is (1), and no two consecutive factors both have length
/// 1 or both consist only of ones.
bool is_nontrivial(const std::vector<Composition>& factors);

/// All nontrivial binary splits alpha = beta o gamma.
std::vector<std::pair<Composition, Composition>> binary_factorizations(const Composition& alpha);

/// The irreducible factorization, found by exhaustive split search. Throws
/// Error if two distinct maximal factorizations are found.
Factorization irreducible_factorization(const Composition& alpha);

/// Every switch beta_1 o ... o beta_k with beta_i in {alpha_i, alpha_i*}.
/// With `up_to_reversal`, each member is reported by its reversal-normalized
/// form and the set is deduplicated accordingly.
std::set<Composition> switching_class(const Composition& alpha, bool up_to_reversal = false);

} // namespace treepoly
