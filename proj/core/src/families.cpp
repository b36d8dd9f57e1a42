#include "treepoly/families.hpp"

#include <algorithm>
#include <map>

#include "treepoly/canonical.hpp"
#include "treepoly/caterpillar.hpp"
#include "treepoly/factorization.hpp"

namespace treepoly {

bool is_gap_free(const std::vector<int>& p)
{
    if (p.empty() || p.front() != 1 || p.back() != 1)
        return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != 0 && p[i] != 1)
            return false;
        if (i > 0 && p[i] == 0 && p[i - 1] == 0)
            return false;
    }
    return true;
}

namespace {

// Coefficients of (c0 + c1 x) p(x), with 1 added at both ends.
Composition padded_product(const std::vector<int>& p, int c0, int c1)
{
    std::vector<int> out(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] += c0 * p[i];
        out[i + 1] += c1 * p[i];
    }
    out.front() += 1;
    out.back() += 1;
    return Composition(std::move(out));
}

} // namespace

EisenstatGordonPair eisenstat_gordon(const std::vector<int>& p, int a, int b)
{
    if (!is_gap_free(p))
        throw DomainError("coefficient list is not gap-free");
    if (a < 1 || b < 1)
        throw DomainError("a and b must be positive");
    Composition first = padded_product(p, a, b);
    Composition second = padded_product(p, b, a);
    Tree t1 = cat(first);
    Tree t2 = cat(second);
    return {std::move(first), std::move(second), std::move(t1), std::move(t2)};
}

Composition eisenstat_gordon_beta(const std::vector<int>& p)
{
    if (!is_gap_free(p))
        throw DomainError("coefficient list is not gap-free");
    std::vector<int> runs{0};
    for (int c : p) {
        if (c == 1)
            ++runs.back();
        else
            runs.push_back(0);
    }
    return Composition(std::move(runs));
}

std::vector<Tree> theorem7_family(const Composition& alpha, const PolarizedTree& a, int max_vertices)
{
    const int size = alpha.sum() * a.tree.size() + 2;
    if (size > max_vertices)
        throw DomainError("family members would have " + std::to_string(size) + " vertices (cap " +
                          std::to_string(max_vertices) + ")");
    std::map<CanonicalCode, Tree> members;
    for (const Composition& beta : switching_class(alpha)) {
        const Tree t = cap(compose_tree(beta, a));
        CanonicalCode code = canonical_code(t);
        members.try_emplace(code, tree_from_code(code));
    }
    std::vector<Tree> out;
    for (auto& [code, t] : members)
        out.push_back(std::move(t));
    return out;
}

} // namespace treepoly
