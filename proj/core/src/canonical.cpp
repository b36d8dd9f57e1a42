#include "treepoly/canonical.hpp"

#include <algorithm>

namespace treepoly {

std::string CanonicalCode::hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (unsigned char c : bytes_) {
        out += digits[c >> 4];
        out += digits[c & 15];
    }
    return out;
}

CanonicalCode CanonicalCode::from_hex(std::string_view hex)
{
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        if (c >= 'A' && c <= 'F')
            return c - 'A' + 10;
        throw DomainError("bad hex digit");
    };
    if (hex.size() % 2)
        throw DomainError("odd-length hex string");
    std::string bytes;
    for (std::size_t i = 0; i < hex.size(); i += 2)
        bytes += static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1]));
    return CanonicalCode(std::move(bytes));
}

namespace {

// Parent array and a BFS order from `root`.
void bfs(const Tree& t, Vertex root, std::vector<Vertex>& order, std::vector<Vertex>& parent)
{
    order.assign(1, root);
    parent.assign(static_cast<std::size_t>(t.size()), -1);
    parent[static_cast<std::size_t>(root)] = root;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex u : t.neighbors(order[i]))
            if (parent[static_cast<std::size_t>(u)] < 0) {
                parent[static_cast<std::size_t>(u)] = order[i];
                order.push_back(u);
            }
}

std::string rooted_code(const Tree& t, Vertex root)
{
    std::vector<Vertex> order, parent;
    bfs(t, root, order, parent);
    std::vector<std::vector<std::string>> child_codes(static_cast<std::size_t>(t.size()));
    std::string code;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto& kids = child_codes[static_cast<std::size_t>(*it)];
        std::sort(kids.begin(), kids.end());
        code = "(";
        for (auto& k : kids)
            code += k;
        code += ')';
        kids.clear();
        if (*it != root)
            child_codes[static_cast<std::size_t>(parent[static_cast<std::size_t>(*it)])].push_back(std::move(code));
    }
    return code;
}

} // namespace

std::vector<Vertex> centroids(const Tree& t)
{
    const int n = t.size();
    std::vector<Vertex> order, parent;
    bfs(t, 0, order, parent);
    std::vector<int> sub(static_cast<std::size_t>(n), 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (*it != 0)
            sub[static_cast<std::size_t>(parent[static_cast<std::size_t>(*it)])] += sub[static_cast<std::size_t>(*it)];
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v) {
        int largest = n - sub[static_cast<std::size_t>(v)];
        for (Vertex u : t.neighbors(v))
            if (parent[static_cast<std::size_t>(u)] == v)
                largest = std::max(largest, sub[static_cast<std::size_t>(u)]);
        if (2 * largest <= n)
            out.push_back(v);
    }
    return out;
}

CanonicalCode canonical_code(const Tree& t)
{
    std::string best;
    for (Vertex c : centroids(t)) {
        std::string code = rooted_code(t, c);
        if (best.empty() || code < best)
            best = std::move(code);
    }
    return CanonicalCode(std::move(best));
}

Tree tree_from_code(const CanonicalCode& code)
{
    const std::string& s = code.bytes();
    std::vector<Vertex> stack;
    std::vector<Edge> edges;
    int next = 0;
    for (char c : s) {
        if (c == '(') {
            if (!stack.empty())
                edges.emplace_back(stack.back(), next);
            stack.push_back(next++);
        } else if (c == ')') {
            if (stack.empty())
                throw DomainError("unbalanced canonical code");
            stack.pop_back();
        } else {
            throw DomainError("bad byte in canonical code");
        }
    }
    if (!stack.empty() || next == 0)
        throw DomainError("unbalanced canonical code");
    return Tree(next, std::move(edges));
}

bool isomorphic(const Tree& a, const Tree& b)
{
    return a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

} // namespace treepoly
