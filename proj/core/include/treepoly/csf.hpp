#pragma once

#include <map>
#include <string>

#include "treepoly/partition.hpp"
#include "treepoly/tree.hpp"

namespace treepoly {

/// Power-sum coefficients c_lambda(T) of the chromatic symmetric function.
/// Only nonzero coefficients are stored.
struct PsumCsf {
    int n = 0;
    std::map<Partition, Int> coeffs;

    Int at(const Partition& lambda) const;

    /// Terms in reverse lexicographic partition order: "-1*p(4) + 2*p(3,1) + ...".
    std::string to_text() const;
    std::string to_json() const;

    friend bool operator==(const PsumCsf&, const PsumCsf&) = default;
};

/// c_lambda(T) = (-1)^(n - l(lambda)) #{F subset E : type(F) = lambda}, computed by
/// a rooted dynamic program over (open component size, closed component sizes).
PsumCsf csf_powersum(const Tree& t);

/// Monomial-basis coefficients: for each lambda the number of proper colorings
/// using color i exactly lambda_i times. Enumerates set partitions into
/// independent blocks, so limited to n <= kMonomialMaxN (DomainError otherwise).
inline constexpr int kMonomialMaxN = 12;
std::map<Partition, Int> csf_monomial(const Tree& t);

} // namespace treepoly
