#include "treepoly/free_trees.hpp"

#include <algorithm>

#include "treepoly/canonical.hpp"

namespace treepoly {

namespace {

// Next rooted level sequence in reverse lexicographic order, changing
// positions >= p. With p unset, p is the last position whose level exceeds 1.
// Returns false when the sequence is the last one.
bool next_rooted(std::vector<int>& seq, std::size_t p)
{
    if (p == 0)
        return false;
    std::size_t q = p - 1;
    while (seq[q] != seq[p] - 1)
        --q;
    for (std::size_t i = p; i < seq.size(); ++i)
        seq[i] = seq[i - p + q];
    return true;
}

bool next_rooted(std::vector<int>& seq)
{
    std::size_t p = seq.size() - 1;
    while (p > 0 && seq[p] == 1)
        --p;
    return next_rooted(seq, p);
}

// Splits at the second child of the root: the first subtree (levels shifted
// up by one) and the rest of the tree.
void split(const std::vector<int>& seq, std::vector<int>& left, std::vector<int>& rest)
{
    std::size_t m = seq.size();
    bool one_found = false;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] == 1) {
            if (one_found) {
                m = i;
                break;
            }
            one_found = true;
        }
    left.clear();
    for (std::size_t i = 1; i < m; ++i)
        left.push_back(seq[i] - 1);
    rest.assign(1, 0);
    rest.insert(rest.end(), seq.begin() + static_cast<std::ptrdiff_t>(m), seq.end());
}

// Returns the sequence itself if it is a centroid-rooted canonical sequence,
// otherwise jumps to the next candidate.
bool next_tree(std::vector<int>& seq)
{
    std::vector<int> left, rest;
    split(seq, left, rest);
    const int lh = *std::max_element(left.begin(), left.end());
    const int rh = *std::max_element(rest.begin(), rest.end());
    bool valid = rh >= lh;
    if (valid && rh == lh) {
        if (left.size() > rest.size())
            valid = false;
        else if (left.size() == rest.size() && left > rest)
            valid = false;
    }
    if (valid)
        return true;
    const std::size_t p = left.size();
    const int old = seq[p];
    if (!next_rooted(seq, p))
        return false;
    if (old > 2) {
        split(seq, left, rest);
        const int h = *std::max_element(left.begin(), left.end());
        const std::size_t len = static_cast<std::size_t>(h) + 1;
        for (std::size_t i = 0; i < len; ++i)
            seq[seq.size() - len + i] = static_cast<int>(i) + 1;
    }
    return true;
}

} // namespace

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n)
{
    if (n < 1)
        throw DomainError("free trees need n >= 1");
    if (n == 1)
        return;
    for (int i = 0; i <= n / 2; ++i)
        layout_.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i)
        layout_.push_back(i);
}

std::optional<Tree> FreeTreeGenerator::next()
{
    if (done_)
        return std::nullopt;
    if (n_ == 1) {
        done_ = true;
        emitted_ = {0};
        return Tree();
    }
    if (!next_tree(layout_)) {
        done_ = true;
        return std::nullopt;
    }
    emitted_ = layout_;
    if (!next_rooted(layout_))
        done_ = true;
    return canonical_form(tree_from_level_sequence(emitted_));
}

Tree tree_from_level_sequence(const std::vector<int>& levels)
{
    if (levels.empty() || levels[0] != 0)
        throw DomainError("level sequence must start at depth 0");
    std::vector<Vertex> last_at_depth{0};
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < levels.size(); ++i) {
        const int d = levels[i];
        if (d < 1 || static_cast<std::size_t>(d) > last_at_depth.size())
            throw DomainError("invalid level sequence");
        last_at_depth.resize(static_cast<std::size_t>(d));
        edges.emplace_back(last_at_depth.back(), static_cast<Vertex>(i));
        last_at_depth.push_back(static_cast<Vertex>(i));
    }
    return Tree(static_cast<int>(levels.size()), std::move(edges));
}

void for_each_free_tree(int n, const std::function<void(const Tree&)>& visit)
{
    FreeTreeGenerator gen(n);
    while (auto t = gen.next())
        visit(*t);
}

std::vector<Tree> free_trees(int n)
{
    std::vector<Tree> out;
    for_each_free_tree(n, [&](const Tree& t) { out.push_back(t); });
    return out;
}

std::uint64_t count_free_trees(int n)
{
    std::uint64_t c = 0;
    for_each_free_tree(n, [&](const Tree&) { ++c; });
    return c;
}

} // namespace treepoly
