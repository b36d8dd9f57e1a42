#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace treepoly {

/// An ordered list of positive integers.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    /// Parses "1,2,1,3,2" (whitespace tolerated). Throws DomainError.
    static Composition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int sum() const;
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    Composition reversed() const;
    bool is_palindrome() const;
    bool all_ones() const;

    /// First and last parts at least 2 (or a single part at least 2): a caterpillar signature.
    bool is_caterpillar_signature() const;

    /// min(alpha, reverse(alpha)) lexicographically.
    Composition reversal_normalized() const;

    /// "1,2,1,3,2"
    std::string to_string() const;

    friend auto operator<=>(const Composition&, const Composition&) = default;
    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

/// Visits every coarsening gamma >= alpha (2^(l(alpha)-1) of them), obtained by
/// merging runs of adjacent parts. alpha itself is visited first.
void for_each_coarsening(const Composition& alpha,
                         const std::function<void(const Composition&)>& visit);

std::vector<Composition> coarsenings(const Composition& alpha);

/// All compositions of n, in lexicographic order.
std::vector<Composition> compositions_of(int n);

} // namespace treepoly
