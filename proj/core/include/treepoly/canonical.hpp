#pragma once

#include <compare>
#include <string>

#include "treepoly/tree.hpp"

namespace treepoly {

/// Isomorphism-invariant encoding of an unrooted tree: the smaller of the
/// AHU parenthesis strings rooted at each centroid. Equal codes iff the trees
/// are isomorphic; codes of trees with the same size have the same length.
class CanonicalCode {
public:
    CanonicalCode() = default;
    explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const { return bytes_; }
    std::string hex() const;
    static CanonicalCode from_hex(std::string_view hex);

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

private:
    std::string bytes_;
};

CanonicalCode canonical_code(const Tree& t);

/// Centroid vertices (one or two).
std::vector<Vertex> centroids(const Tree& t);

/// Rebuilds the tree a code describes. Vertices are labeled in preorder of the
/// encoding, so canonical_form gives every isomorphism class one labeling.
Tree tree_from_code(const CanonicalCode& code);

inline Tree canonical_form(const Tree& t) { return tree_from_code(canonical_code(t)); }

bool isomorphic(const Tree& a, const Tree& b);

} // namespace treepoly
