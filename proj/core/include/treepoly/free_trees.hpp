#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "treepoly/tree.hpp"

namespace treepoly {

/// Streams one representative of every isomorphism class of trees on n
/// vertices, each in canonical_form(). Level sequences are generated in
/// constant amortized time (Wright, Richmond, Odlyzko and McKay); the stream
/// is single-consumer.
class FreeTreeGenerator {
public:
    explicit FreeTreeGenerator(int n);

    std::optional<Tree> next();

    /// The raw rooted level sequence of the tree most recently returned.
    const std::vector<int>& level_sequence() const { return emitted_; }

private:
    int n_;
    bool done_ = false;
    std::vector<int> layout_;
    std::vector<int> emitted_;
};

void for_each_free_tree(int n, const std::function<void(const Tree&)>& visit);
std::vector<Tree> free_trees(int n);
std::uint64_t count_free_trees(int n);

/// Tree with the given level sequence (depth of each vertex in preorder).
Tree tree_from_level_sequence(const std::vector<int>& levels);

} // namespace treepoly
