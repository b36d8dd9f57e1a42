#include "treepoly/factorization.hpp"

#include <algorithm>
#include <map>

#include "treepoly/composition_ops.hpp"
#include "treepoly/error.hpp"

namespace treepoly {

Composition Factorization::compose_all() const
{
    if (factors.empty())
        throw DomainError("empty factorization");
    Composition r = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i)
        r = compose(r, factors[i]);
    return r;
}

std::string Factorization::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i)
        s += (i ? " o (" : "(") + factors[i].to_string() + ")";
    return s;
}

bool is_nontrivial(const std::vector<Composition>& factors)
{
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] == Composition{1})
            return false;
        if (i == 0)
            continue;
        const Composition& p = factors[i - 1];
        const Composition& c = factors[i];
        if (p.length() == 1 && c.length() == 1)
            return false;
        if (p.all_ones() && c.all_ones())
            return false;
    }
    return true;
}

namespace {

// Reads alpha as gamma^(.)b_1 . gamma^(.)b_2 . ...; returns (b_1, b_2, ...) or
// an empty composition when alpha has no such form.
Composition parse_blocks(const Composition& alpha, const Composition& gamma)
{
    std::vector<int> b;
    std::size_t pos = 0;
    const auto& a = alpha.parts();
    while (pos < a.size()) {
        bool matched = false;
        for (int k = 1;; ++k) {
            const Composition block = odot_power(gamma, k);
            const auto len = static_cast<std::size_t>(block.length());
            if (pos + len > a.size() || block.sum() > alpha.sum())
                break;
            if (std::equal(block.parts().begin(), block.parts().end(), a.begin() + static_cast<std::ptrdiff_t>(pos))) {
                b.push_back(k);
                pos += len;
                matched = true;
                break;
            }
        }
        if (!matched)
            return Composition();
    }
    return Composition(std::move(b));
}

} // namespace

std::vector<std::pair<Composition, Composition>> binary_factorizations(const Composition& alpha)
{
    std::vector<std::pair<Composition, Composition>> out;
    const int total = alpha.sum();
    for (int g = 1; g <= total; ++g) {
        if (total % g)
            continue;
        // gamma shares its first m-1 parts with alpha; its last part makes the sum g.
        for (int m = 1; m <= alpha.length(); ++m) {
            std::vector<int> parts(alpha.parts().begin(), alpha.parts().begin() + (m - 1));
            int used = 0;
            for (int p : parts)
                used += p;
            if (used >= g)
                break;
            parts.push_back(g - used);
            const Composition gamma(std::move(parts));
            const Composition beta = parse_blocks(alpha, gamma);
            if (beta.empty() || !is_nontrivial({beta, gamma}))
                continue;
            out.emplace_back(beta, gamma);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

using FactorSet = std::set<std::vector<Composition>>;

const FactorSet& all_factorizations(const Composition& alpha, std::map<Composition, FactorSet>& memo)
{
    if (auto it = memo.find(alpha); it != memo.end())
        return it->second;
    FactorSet result{{alpha}};
    for (const auto& [beta, gamma] : binary_factorizations(alpha)) {
        const FactorSet left = all_factorizations(beta, memo);
        const FactorSet right = all_factorizations(gamma, memo);
        for (const auto& l : left)
            for (const auto& r : right) {
                std::vector<Composition> f = l;
                f.insert(f.end(), r.begin(), r.end());
                if (is_nontrivial(f))
                    result.insert(std::move(f));
            }
    }
    return memo[alpha] = std::move(result);
}

} // namespace

Factorization irreducible_factorization(const Composition& alpha)
{
    if (alpha.empty())
        throw DomainError("cannot factor the empty composition");
    std::map<Composition, FactorSet> memo;
    const FactorSet& all = all_factorizations(alpha, memo);
    std::map<Composition, bool> irreducible;
    auto is_irreducible = [&](const Composition& c) {
        auto it = irreducible.find(c);
        if (it == irreducible.end())
            it = irreducible.emplace(c, binary_factorizations(c).empty()).first;
        return it->second;
    };
    std::vector<std::vector<Composition>> maximal;
    for (const auto& f : all)
        if (std::all_of(f.begin(), f.end(), is_irreducible))
            maximal.push_back(f);
    if (maximal.size() != 1)
        throw Error("composition (" + alpha.to_string() + ") has " + std::to_string(maximal.size()) +
                    " distinct irreducible factorizations");
    return Factorization{maximal.front()};
}

std::set<Composition> switching_class(const Composition& alpha, bool up_to_reversal)
{
    const auto factors = irreducible_factorization(alpha).factors;
    const std::size_t k = factors.size();
    if (k > 20)
        throw DomainError("too many irreducible factors");
    std::set<Composition> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        Factorization f;
        for (std::size_t i = 0; i < k; ++i)
            f.factors.push_back(mask >> i & 1 ? factors[i].reversed() : factors[i]);
        const Composition c = f.compose_all();
        out.insert(up_to_reversal ? c.reversal_normalized() : c);
    }
    return out;
}

} // namespace treepoly
