#include "treepoly/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace treepoly {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be non-increasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        extend(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        throw DomainError("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> prefix;
    extend(n, n, prefix, out);
    return out;
}

Int multiset_binomial(const Partition& lambda, const Partition& mu)
{
    std::map<int, int> ml, mm;
    for (int p : lambda.parts())
        ++ml[p];
    for (int p : mu.parts())
        ++mm[p];
    Int r = 1;
    for (auto [part, m] : mm) {
        auto it = ml.find(part);
        r = checked_mul(r, binomial(it == ml.end() ? 0 : it->second, m));
        if (r == 0)
            return 0;
    }
    return r;
}

} // namespace treepoly
