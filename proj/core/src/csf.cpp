#include "treepoly/csf.hpp"

#include <algorithm>
#include <json.hpp>

namespace treepoly {

Int PsumCsf::at(const Partition& lambda) const
{
    auto it = coeffs.find(lambda);
    return it == coeffs.end() ? 0 : it->second;
}

std::string PsumCsf::to_text() const
{
    if (coeffs.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        const Int c = it->second;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        out += std::to_string(c < 0 ? -c : c) + "*p" + it->first.to_string();
    }
    return out;
}

std::string PsumCsf::to_json() const
{
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        terms.push_back({{"partition", it->first.parts()}, {"coeff", it->second}});
    return nlohmann::json{{"n", n}, {"terms", terms}}.dump();
}

namespace {

// DP state key: byte 0 is the size of the component still open at the current
// root, the remaining bytes are the sizes of closed components, sorted.
using State = std::string;
using Table = std::map<State, Int>;

State merged(const State& a, const State& b, int open, int extra_closed)
{
    std::string closed;
    closed.reserve(a.size() + b.size());
    closed.append(a, 1);
    closed.append(b, 1);
    if (extra_closed > 0)
        closed += static_cast<char>(extra_closed);
    std::sort(closed.begin(), closed.end());
    return static_cast<char>(open) + closed;
}

} // namespace

PsumCsf csf_powersum(const Tree& t)
{
    const int n = t.size();
    std::vector<Vertex> order{0}, parent(static_cast<std::size_t>(n), -1);
    parent[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex u : t.neighbors(order[i]))
            if (parent[static_cast<std::size_t>(u)] < 0) {
                parent[static_cast<std::size_t>(u)] = order[i];
                order.push_back(u);
            }
    std::vector<Table> tables(static_cast<std::size_t>(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        Table cur{{State(1, static_cast<char>(1)), 1}};
        for (Vertex c : t.neighbors(v)) {
            if (parent[static_cast<std::size_t>(c)] != v)
                continue;
            Table next;
            for (const auto& [sa, ca] : cur)
                for (const auto& [sb, cb] : tables[static_cast<std::size_t>(c)]) {
                    const Int w = checked_mul(ca, cb);
                    const int s1 = static_cast<unsigned char>(sa[0]);
                    const int s2 = static_cast<unsigned char>(sb[0]);
                    Int& keep = next[merged(sa, sb, s1 + s2, 0)];
                    keep = checked_add(keep, w);
                    Int& cut = next[merged(sa, sb, s1, s2)];
                    cut = checked_add(cut, w);
                }
            tables[static_cast<std::size_t>(c)].clear();
            cur = std::move(next);
        }
        tables[static_cast<std::size_t>(v)] = std::move(cur);
    }
    PsumCsf out;
    out.n = n;
    for (const auto& [s, c] : tables[0]) {
        std::vector<int> parts;
        for (unsigned char b : s)
            parts.push_back(b);
        Partition lambda = Partition::from_unsorted(std::move(parts));
        Int& slot = out.coeffs[lambda];
        slot = checked_add(slot, checked_mul(c, sign_of_parity(n - lambda.length())));
    }
    return out;
}

namespace {

struct ColoringCounter {
    const Tree& t;
    std::vector<int> block_of;
    std::vector<int> block_sizes;
    std::map<Partition, Int> out;

    void run(int v)
    {
        if (v == t.size()) {
            Partition lambda = Partition::from_unsorted(block_sizes);
            Int w = 1;
            std::map<int, int> mult;
            for (int p : lambda.parts())
                ++mult[p];
            for (auto [p, m] : mult)
                for (int i = 2; i <= m; ++i)
                    w = checked_mul(w, i);
            out[lambda] = checked_add(out[lambda], w);
            return;
        }
        const int blocks = static_cast<int>(block_sizes.size());
        for (int b = 0; b <= blocks; ++b) {
            bool ok = true;
            for (Vertex u : t.neighbors(v))
                if (u < v && block_of[static_cast<std::size_t>(u)] == b)
                    ok = false;
            if (!ok)
                continue;
            block_of[static_cast<std::size_t>(v)] = b;
            if (b == blocks)
                block_sizes.push_back(1);
            else
                ++block_sizes[static_cast<std::size_t>(b)];
            run(v + 1);
            if (b == blocks)
                block_sizes.pop_back();
            else
                --block_sizes[static_cast<std::size_t>(b)];
        }
    }
};

} // namespace

std::map<Partition, Int> csf_monomial(const Tree& t)
{
    if (t.size() > kMonomialMaxN)
        throw DomainError("csf_monomial supports n <= " + std::to_string(kMonomialMaxN));
    ColoringCounter counter{t, std::vector<int>(static_cast<std::size_t>(t.size()), -1), {}, {}};
    counter.run(0);
    return std::move(counter.out);
}

} // namespace treepoly
