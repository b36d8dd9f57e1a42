#pragma once

#include <compare>
#include <string>
#include <vector>

#include "treepoly/checked.hpp"

namespace treepoly {

/// An integer partition: parts are positive and non-increasing.
class Partition {
public:
    Partition() = default;

    /// Throws DomainError unless `parts` is non-increasing and positive.
    explicit Partition(std::vector<int> parts);

    /// Sorts `parts` into non-increasing order first.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                     // |lambda| = n
    int length() const { return static_cast<int>(parts_.size()); }
    int multiplicity(int part) const;     // m_i(lambda)

    /// "(2,1,1)"; the empty partition prints as "()".
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// prod_i C(m_i(lambda), m_i(mu)).
Int multiset_binomial(const Partition& lambda, const Partition& mu);

} // namespace treepoly
