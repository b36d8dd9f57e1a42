#include "treepoly/closed_form.hpp"

namespace treepoly {

namespace {

void require_signature(const Composition& alpha)
{
    if (!alpha.is_caterpillar_signature())
        throw DomainError("closed forms need a caterpillar signature, got (" + alpha.to_string() + ")");
    if (alpha.length() > 30)
        throw DomainError("spine too long for the closed form");
}

// base^0, base^1, ..., base^max
std::vector<SparsePoly> powers(const SparsePoly& base, int max)
{
    std::vector<SparsePoly> p{SparsePoly::constant(base.vars(), 1)};
    for (int i = 1; i <= max; ++i)
        p.push_back(p.back() * base);
    return p;
}

} // namespace

GdpPoly gdp_cat(const Composition& alpha)
{
    require_signature(alpha);
    const int k = alpha.length();
    const int leaves = alpha.sum() - k;
    const SparsePoly x = SparsePoly::variable(vars::gdp, "x");
    const SparsePoly y = SparsePoly::variable(vars::gdp, "y");
    const SparsePoly z = SparsePoly::variable(vars::gdp, "z");
    const auto in_pow = powers(x * z + y, leaves);
    const auto out_pow = powers(x * y + SparsePoly::constant(vars::gdp, 1), leaves);
    SparsePoly total(vars::gdp);
    for (std::uint32_t u = 0; u < (std::uint32_t{1} << k); ++u) {
        int size = 0, internal = 0, boundary = 0, in_leaves = 0, out_leaves = 0;
        for (int i = 0; i < k; ++i) {
            const bool in = u >> i & 1;
            size += in;
            (in ? in_leaves : out_leaves) += alpha[static_cast<std::size_t>(i)] - 1;
            if (i + 1 < k) {
                const bool next = u >> (i + 1) & 1;
                internal += in && next;
                boundary += in != next;
            }
        }
        total += SparsePoly::monomial(vars::gdp, std::array{size, boundary, internal}, 1) *
                 in_pow[static_cast<std::size_t>(in_leaves)] * out_pow[static_cast<std::size_t>(out_leaves)];
    }
    return total;
}

HdpPoly hdp_cat(const Composition& alpha)
{
    require_signature(alpha);
    const int k = alpha.length();
    const int n = alpha.sum();
    const auto yz = powers(SparsePoly::variable(vars::hdp, "y") + SparsePoly::variable(vars::hdp, "z"), n - k);
    SparsePoly total = SparsePoly::monomial(vars::hdp, std::array{1, 0}, n - k);
    for (int i = 0; i < k; ++i) {
        int leaves = 0;
        for (int j = i; j < k; ++j) {
            leaves += alpha[static_cast<std::size_t>(j)] - 1;
            const int ends = (i > 0) + (j < k - 1);
            total += SparsePoly::monomial(vars::hdp, std::array{ends, j - i}, 1) * yz[static_cast<std::size_t>(leaves)];
        }
    }
    return total;
}

} // namespace treepoly
