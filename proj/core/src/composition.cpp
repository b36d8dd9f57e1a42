#include "treepoly/composition.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <charconv>
#include <numeric>

#include "treepoly/error.hpp"

namespace treepoly {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p < 1)
            throw DomainError("composition parts must be positive");
}

Composition Composition::parse(std::string_view text)
{
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
            tok.remove_prefix(1);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
            tok.remove_suffix(1);
        int v = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size())
            throw DomainError("bad composition: '" + std::string(text) + "'");
        parts.push_back(v);
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

int Composition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition Composition::reversed() const
{
    return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

bool Composition::is_palindrome() const { return std::equal(parts_.begin(), parts_.end(), parts_.rbegin()); }

bool Composition::all_ones() const
{
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

bool Composition::is_caterpillar_signature() const
{
    return !parts_.empty() && parts_.front() >= 2 && parts_.back() >= 2;
}

Composition Composition::reversal_normalized() const { return std::min(*this, reversed()); }

std::string Composition::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

void for_each_coarsening(const Composition& alpha,
                         const std::function<void(const Composition&)>& visit)
{
    const int k = alpha.length();
    if (k == 0) {
        visit(alpha);
        return;
    }
    // Bit i of `merged` set: parts i and i+1 are merged.
    const std::uint64_t limit = std::uint64_t{1} << (k - 1);
    std::vector<int> parts;
    for (std::uint64_t merged = 0; merged < limit; ++merged) {
        parts.clear();
        int acc = alpha[0];
        for (int i = 1; i < k; ++i) {
            if (merged >> (i - 1) & 1) {
                acc += alpha[static_cast<std::size_t>(i)];
            } else {
                parts.push_back(acc);
                acc = alpha[static_cast<std::size_t>(i)];
            }
        }
        parts.push_back(acc);
        visit(Composition(parts));
    }
}

std::vector<Composition> coarsenings(const Composition& alpha)
{
    std::vector<Composition> out;
    for_each_coarsening(alpha, [&](const Composition& g) { out.push_back(g); });
    return out;
}

namespace {

void extend(int remaining, std::vector<int>& prefix, std::vector<Composition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = 1; p <= remaining; ++p) {
        prefix.push_back(p);
        extend(remaining - p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Composition> compositions_of(int n)
{
    std::vector<Composition> out;
    std::vector<int> prefix;
    if (n > 0)
        extend(n, prefix, out);
    return out;
}

} // namespace treepoly
