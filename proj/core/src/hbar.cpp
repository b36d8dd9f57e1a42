#include "treepoly/hbar.hpp"

#include <algorithm>

#include "treepoly/caterpillar.hpp"
#include "treepoly/composition_ops.hpp"

namespace treepoly {

namespace {

constexpr int kMaxIndexedVars = static_cast<int>(SparsePoly::kMaxVars) - 2;

int resolve_vars(const Composition& alpha, int n_vars)
{
    if (alpha.empty())
        throw DomainError("hbar of the empty composition");
    if (alpha.length() > kHbarMaxLength)
        throw DomainError("hbar supports length <= " + std::to_string(kHbarMaxLength));
    const int n = n_vars == 0 ? alpha.sum() : n_vars;
    if (n < alpha.sum())
        throw DomainError("hbar: fewer indexed variables than |alpha|");
    if (n > kMaxIndexedVars)
        throw DomainError("hbar: |alpha| exceeds " + std::to_string(kMaxIndexedVars));
    return n;
}

SparsePoly y_plus_z(const SparsePoly::VarList& v)
{
    return SparsePoly::variable(v, "y") + SparsePoly::variable(v, "z");
}

} // namespace

HbarPoly hbar(const Composition& alpha, int n_vars)
{
    const int n = resolve_vars(alpha, n_vars);
    HbarPoly h{SparsePoly(vars::hbar(n)), alpha.length() - 1};
    std::vector<int> e(static_cast<std::size_t>(n) + 2, 0);
    for_each_coarsening(alpha, [&](const Composition& gamma) {
        e[0] = gamma.length() - 1;
        e[1] = alpha.length() - gamma.length();
        for (int part : gamma.parts()) {
            e[static_cast<std::size_t>(part) + 1] = 1;
            h.cleared.add_term(e, 1);
            e[static_cast<std::size_t>(part) + 1] = 0;
        }
    });
    return h;
}

bool hbar_equal(const HbarPoly& a, const HbarPoly& b)
{
    SparsePoly ca = a.cleared, cb = b.cleared;
    if (ca.vars() != cb.vars()) {
        const auto& wider = ca.arity() >= cb.arity() ? ca.vars() : cb.vars();
        ca = ca.embed(wider);
        cb = cb.embed(wider);
    }
    const SparsePoly s = y_plus_z(ca.vars());
    return ca * s.pow(static_cast<unsigned>(b.denom_exp)) == cb * s.pow(static_cast<unsigned>(a.denom_exp));
}

HdpPoly hbar_specialize(const Composition& alpha)
{
    const HbarPoly h = hbar(alpha);
    const SparsePoly s = y_plus_z(vars::hdp);
    std::vector<SparsePoly> powers{SparsePoly::constant(vars::hdp, 1)};
    SparsePoly total(vars::hdp);
    for (const auto& [e, c] : h.cleared.terms()) {
        std::size_t index = 0;
        for (std::size_t i = 2; i < h.cleared.arity(); ++i)
            if (e[i]) {
                if (index || e[i] != 1)
                    throw Error("hbar term is not linear in the indexed variables");
                index = i - 1;
            }
        while (powers.size() <= index + 1)
            powers.push_back(powers.back() * s);
        total += SparsePoly::monomial(vars::hdp, std::array{int{e[0]}, int{e[1]}}, c) * powers[index + 1];
    }
    try {
        return total.divide_exact(s.pow(static_cast<unsigned>(h.denom_exp)));
    } catch (const DomainError&) {
        throw Error("specialized hbar is not divisible by (y+z)^" + std::to_string(h.denom_exp));
    }
}

bool hbar_recurrence_check(const Composition& a, const Composition& b)
{
    const int n = a.sum() + b.sum();
    const auto v = vars::hbar(n);
    const SparsePoly y = SparsePoly::variable(v, "y");
    const SparsePoly z = SparsePoly::variable(v, "z");
    const SparsePoly s = y + z;
    const SparsePoly cab = hbar(concat(a, b), n).cleared;
    const SparsePoly ca = hbar(a, n).cleared;
    const SparsePoly cb = hbar(b, n).cleared;
    const SparsePoly codot = hbar(near_concat(a, b), n).cleared;
    const SparsePoly lhs = s * cab;
    const SparsePoly rhs = y * (ca * s.pow(static_cast<unsigned>(b.length())) + cb * s.pow(static_cast<unsigned>(a.length()))) +
                           z * s * codot;
    return lhs == rhs;
}

bool uhdp_recurrence_check(const Composition& a, const Composition& b)
{
    auto u = [](const Composition& c) { return uhdp(cat(pad_ones(c))); };
    const SparsePoly y = SparsePoly::variable(vars::hdp, "y");
    const SparsePoly z = SparsePoly::variable(vars::hdp, "z");
    return (y + z) * u(concat(a, b)) == y * (u(a) + u(b)) + z * u(near_concat(a, b));
}

SparsePoly lpoly(const Composition& alpha)
{
    const int n = resolve_vars(alpha, 0);
    SparsePoly l(vars::indexed_x(n));
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for_each_coarsening(alpha, [&](const Composition& gamma) {
        std::fill(e.begin(), e.end(), 0);
        for (int part : gamma.parts())
            ++e[static_cast<std::size_t>(part) - 1];
        l.add_term(e, 1);
    });
    return l;
}

HbarPoly hbar_from_lpoly(const SparsePoly& l)
{
    const int n = static_cast<int>(l.arity());
    if (l.vars() != vars::indexed_x(n))
        throw DomainError("expected a polynomial over x1..xN");
    int length = 0;
    for (const auto& [e, c] : l.terms()) {
        int deg = 0;
        for (int i = 0; i < n; ++i)
            deg += e[static_cast<std::size_t>(i)];
        length = std::max(length, deg);
    }
    if (length == 0)
        throw DomainError("not the L-polynomial of a composition");
    HbarPoly h{SparsePoly(vars::hbar(n)), length - 1};
    std::vector<int> out(static_cast<std::size_t>(n) + 2, 0);
    for (const auto& [e, c] : l.terms()) {
        int deg = 0;
        for (int i = 0; i < n; ++i)
            deg += e[static_cast<std::size_t>(i)];
        out[0] = deg - 1;
        out[1] = length - deg;
        for (int i = 0; i < n; ++i) {
            if (!e[static_cast<std::size_t>(i)])
                continue;
            out[static_cast<std::size_t>(i) + 2] = 1;
            h.cleared.add_term(out, checked_mul(c, e[static_cast<std::size_t>(i)]));
            out[static_cast<std::size_t>(i) + 2] = 0;
        }
    }
    return h;
}

} // namespace treepoly
