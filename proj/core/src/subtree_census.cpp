#include "treepoly/subtree_census.hpp"

namespace treepoly {

namespace {

class Enumerator {
public:
    Enumerator(const Tree& t, const std::function<void(const SubtreeStats&)>& visit)
        : t_(t), visit_(visit), deg_in_s_(static_cast<std::size_t>(t.size()), 0)
    {
    }

    void run()
    {
        for (Vertex r = 0; r < t_.size(); ++r) {
            root_ = r;
            frontier_.clear();
            size_ = 1;
            degree_sum_ = t_.degree(r);
            ones_ = 0;
            push_neighbors(r, -1);
            grow(0);
        }
    }

private:
    void push_neighbors(Vertex u, Vertex from)
    {
        for (Vertex w : t_.neighbors(u))
            if (w > root_ && w != from)
                frontier_.emplace_back(w, u);
    }

    void bump(Vertex v, int delta)
    {
        int& d = deg_in_s_[static_cast<std::size_t>(v)];
        ones_ -= d == 1;
        d += delta;
        ones_ += d == 1;
    }

    void grow(std::size_t pos)
    {
        if (pos == frontier_.size()) {
            SubtreeStats s;
            s.edges = size_ - 1;
            s.boundary = degree_sum_ - 2 * s.edges;
            s.leaf_edges = size_ == 1 ? 0 : size_ == 2 ? 1 : ones_;
            visit_(s);
            return;
        }
        grow(pos + 1);
        const auto [u, p] = frontier_[pos];
        const std::size_t mark = frontier_.size();
        bump(u, 1);
        bump(p, 1);
        ++size_;
        degree_sum_ += t_.degree(u);
        push_neighbors(u, p);
        grow(pos + 1);
        frontier_.resize(mark);
        degree_sum_ -= t_.degree(u);
        --size_;
        bump(p, -1);
        bump(u, -1);
    }

    const Tree& t_;
    const std::function<void(const SubtreeStats&)>& visit_;
    std::vector<int> deg_in_s_;
    std::vector<std::pair<Vertex, Vertex>> frontier_;
    Vertex root_ = 0;
    int size_ = 0;
    int degree_sum_ = 0;
    int ones_ = 0;
};

} // namespace

void for_each_subtree(const Tree& t, const std::function<void(const SubtreeStats&)>& visit)
{
    Enumerator(t, visit).run();
}

SubtreeCensus::SubtreeCensus(const Tree& t)
    : n_(t.size()), counts_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0)
{
    for_each_subtree(t, [this](const SubtreeStats& s) { ++counts_[index(s.edges, s.boundary, s.leaf_edges)]; });
}

std::size_t SubtreeCensus::index(int e, int d, int l) const
{
    const auto n = static_cast<std::size_t>(n_);
    return (static_cast<std::size_t>(e) * n + static_cast<std::size_t>(d)) * n + static_cast<std::size_t>(l);
}

Int SubtreeCensus::count(int edges, int boundary, int leaf_edges) const
{
    if (edges < 0 || boundary < 0 || leaf_edges < 0 || edges >= n_ || boundary >= n_ || leaf_edges >= n_)
        return 0;
    return counts_[index(edges, boundary, leaf_edges)];
}

Int SubtreeCensus::total() const
{
    Int s = 0;
    for (Int c : counts_)
        s = checked_add(s, c);
    return s;
}

namespace {

template <typename F>
void for_each_count(int n, const std::vector<Int>& counts, F f)
{
    std::size_t i = 0;
    for (int e = 0; e < n; ++e)
        for (int d = 0; d < n; ++d)
            for (int l = 0; l < n; ++l, ++i)
                if (counts[i])
                    f(e, d, l, counts[i]);
}

} // namespace

HdpPoly SubtreeCensus::hdp() const
{
    SparsePoly p(vars::hdp);
    for_each_count(n_, counts_, [&](int e, int d, int, Int c) { p.add_term(std::array{d, e}, c); });
    return p;
}

StpPoly SubtreeCensus::stp() const
{
    SparsePoly p(vars::stp);
    for_each_count(n_, counts_, [&](int e, int, int l, Int c) { p.add_term(std::array{e, l}, c); });
    return p;
}

SoupPoly SubtreeCensus::soup() const
{
    SparsePoly p(vars::soup);
    for_each_count(n_, counts_, [&](int e, int d, int l, Int c) { p.add_term(std::array{e, d, l}, c); });
    return p;
}

StpPoly stp(const Tree& t) { return SubtreeCensus(t).stp(); }
SoupPoly soup(const Tree& t) { return SubtreeCensus(t).soup(); }
Int subtree_count(const Tree& t) { return SubtreeCensus(t).total(); }

} // namespace treepoly
