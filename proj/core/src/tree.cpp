#include "treepoly/tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace treepoly {

const char* to_string(TreeError::Kind kind)
{
    switch (kind) {
    case TreeError::Kind::parse: return "parse";
    case TreeError::Kind::bad_label: return "bad_label";
    case TreeError::Kind::self_loop: return "self_loop";
    case TreeError::Kind::duplicate_edge: return "duplicate_edge";
    case TreeError::Kind::cycle: return "cycle";
    case TreeError::Kind::disconnected: return "disconnected";
    case TreeError::Kind::not_an_edge: return "not_an_edge";
    case TreeError::Kind::leaf_edge: return "leaf_edge";
    case TreeError::Kind::not_caterpillar: return "not_caterpillar";
    }
    return "unknown";
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

std::string edge_text(const Edge& e) { return std::to_string(e.first) + " " + std::to_string(e.second); }

} // namespace

Tree::Tree() : n_(1), adj_(1) {}

Tree::Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges))
{
    if (n < 1)
        throw TreeError(TreeError::Kind::bad_label, "a tree needs at least one vertex");
    std::set<Edge> seen;
    UnionFind uf(n);
    for (const Edge& e : edges_) {
        auto [u, v] = e;
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw TreeError(TreeError::Kind::bad_label,
                            "edge " + edge_text(e) + " has a label outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw TreeError(TreeError::Kind::self_loop, "self-loop at vertex " + std::to_string(u));
        if (!seen.insert(std::minmax(u, v)).second)
            throw TreeError(TreeError::Kind::duplicate_edge, "duplicate edge " + edge_text(e));
        if (!uf.unite(u, v))
            throw TreeError(TreeError::Kind::cycle, "edge " + edge_text(e) + " closes a cycle");
    }
    if (static_cast<int>(edges_.size()) != n - 1)
        throw TreeError(TreeError::Kind::disconnected,
                        "graph is disconnected (" + std::to_string(n - static_cast<int>(edges_.size())) +
                            " components)");
    adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
}

bool Tree::has_edge(Vertex u, Vertex v) const
{
    if (u < 0 || u >= n_)
        return false;
    auto nb = neighbors(u);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

int Tree::leaf_count() const
{
    int c = 0;
    for (const auto& a : adj_)
        c += a.size() == 1;
    return c;
}

std::vector<int> Tree::degree_sequence() const
{
    std::vector<int> counts(static_cast<std::size_t>(n_), 0);
    for (const auto& a : adj_)
        ++counts[a.size()];
    return counts;
}

std::vector<Edge> Tree::sorted_edges() const
{
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (auto [u, v] : edges_)
        out.push_back(std::minmax(u, v));
    std::sort(out.begin(), out.end());
    return out;
}

std::string Tree::to_edge_list() const
{
    std::string s = "n=" + std::to_string(n_) + "\n";
    for (const Edge& e : edges_)
        s += edge_text(e) + "\n";
    return s;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

long parse_int(std::string_view tok, int line_no)
{
    long v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size())
        throw TreeError(TreeError::Kind::parse,
                        "line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(tok) + "'");
    return v;
}

} // namespace

Tree parse_tree(std::string_view text)
{
    std::optional<long> declared;
    std::vector<Edge> edges;
    long max_label = -1;
    int line_no = 0;
    bool first_content = true;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        std::string_view line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;
        if (line.substr(0, 2) == "n=") {
            if (!first_content)
                throw TreeError(TreeError::Kind::parse, "line " + std::to_string(line_no) + ": 'n=' must come first");
            declared = parse_int(trim(line.substr(2)), line_no);
            if (*declared < 1)
                throw TreeError(TreeError::Kind::bad_label, "declared vertex count must be positive");
            first_content = false;
            continue;
        }
        first_content = false;
        std::istringstream is{std::string(line)};
        std::string a, b, extra;
        if (!(is >> a >> b) || (is >> extra))
            throw TreeError(TreeError::Kind::parse,
                            "line " + std::to_string(line_no) + ": expected 'u v', got '" + std::string(line) + "'");
        long u = parse_int(a, line_no);
        long v = parse_int(b, line_no);
        if (u < 0 || v < 0)
            throw TreeError(TreeError::Kind::bad_label, "line " + std::to_string(line_no) + ": negative label");
        if (u > 1'000'000 || v > 1'000'000)
            throw TreeError(TreeError::Kind::bad_label, "line " + std::to_string(line_no) + ": label too large");
        max_label = std::max({max_label, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long n = declared.value_or(max_label + 1);
    if (!declared && edges.empty())
        throw TreeError(TreeError::Kind::parse, "empty tree description");
    if (max_label >= n)
        throw TreeError(TreeError::Kind::bad_label,
                        "label " + std::to_string(max_label) + " exceeds declared n=" + std::to_string(n));
    return Tree(static_cast<int>(n), std::move(edges));
}

Tree read_tree_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open tree file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_tree(os.str());
}

Tree near_contract(const Tree& t, Vertex v, Vertex w)
{
    if (!t.has_edge(v, w))
        throw TreeError(TreeError::Kind::not_an_edge,
                        "(" + std::to_string(v) + "," + std::to_string(w) + ") is not an edge");
    if (t.degree(v) < 2 || t.degree(w) < 2)
        throw TreeError(TreeError::Kind::leaf_edge,
                        "(" + std::to_string(v) + "," + std::to_string(w) + ") is a leaf edge");
    std::vector<Edge> edges;
    edges.reserve(t.edges().size());
    for (auto [a, b] : t.edges()) {
        if ((a == v && b == w) || (a == w && b == v))
            edges.emplace_back(a, b);
        else if (a == w)
            edges.emplace_back(v, b);
        else if (b == w)
            edges.emplace_back(a, v);
        else
            edges.emplace_back(a, b);
    }
    return Tree(t.size(), std::move(edges));
}

namespace {

// Vertices reachable from `start` without crossing `blocked`.
std::vector<Vertex> side(const Tree& t, Vertex start, Vertex blocked)
{
    std::vector<Vertex> out{start};
    std::vector<char> seen(static_cast<std::size_t>(t.size()), 0);
    seen[static_cast<std::size_t>(start)] = seen[static_cast<std::size_t>(blocked)] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (Vertex u : t.neighbors(out[i]))
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                out.push_back(u);
            }
    return out;
}

Tree induced_with_edge(const Tree& t, Vertex root, Vertex other)
{
    std::vector<Vertex> vs = side(t, root, other);
    std::sort(vs.begin() + 1, vs.end());
    std::vector<int> label(static_cast<std::size_t>(t.size()), -1);
    label[static_cast<std::size_t>(root)] = 0;
    label[static_cast<std::size_t>(other)] = 1;
    int next = 2;
    for (std::size_t i = 1; i < vs.size(); ++i)
        label[static_cast<std::size_t>(vs[i])] = next++;
    std::vector<Edge> edges{{0, 1}};
    for (auto [a, b] : t.edges()) {
        if ((a == root && b == other) || (a == other && b == root))
            continue;
        int la = label[static_cast<std::size_t>(a)], lb = label[static_cast<std::size_t>(b)];
        if (la >= 0 && lb >= 0 && la != 1 && lb != 1)
            edges.emplace_back(la, lb);
    }
    return Tree(next, std::move(edges));
}

} // namespace

std::pair<Tree, Tree> split_keep_edge(const Tree& t, Vertex v, Vertex w)
{
    if (!t.has_edge(v, w))
        throw TreeError(TreeError::Kind::not_an_edge,
                        "(" + std::to_string(v) + "," + std::to_string(w) + ") is not an edge");
    return {induced_with_edge(t, v, w), induced_with_edge(t, w, v)};
}

Tree join(const Tree& a, Vertex u, const Tree& b, Vertex b_v)
{
    const int off = a.size();
    std::vector<Edge> edges = a.edges();
    for (auto [x, y] : b.edges())
        edges.emplace_back(x + off, y + off);
    edges.emplace_back(u, b_v + off);
    return Tree(a.size() + b.size(), std::move(edges));
}

Tree add_leaf(const Tree& t, Vertex v)
{
    std::vector<Edge> edges = t.edges();
    edges.emplace_back(v, t.size());
    return Tree(t.size() + 1, std::move(edges));
}

} // namespace treepoly
