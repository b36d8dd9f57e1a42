#pragma once

#include "oracles.hpp"
#include "treepoly/sparse_poly.hpp"
#include "treepoly/tree.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace testing_support {

using treepoly::Int;
using treepoly::SparsePoly;
using treepoly::Tree;

struct Term {
    Int coeff;
    std::vector<int> exps;
};

inline SparsePoly poly(const SparsePoly::VarList& vars, std::initializer_list<Term> terms)
{
    SparsePoly p(vars);
    for (const auto& t : terms)
        p.add_term(t.exps, t.coeff);
    return p;
}

inline Tree path4() { return treepoly::parse_tree("0 1\n1 2\n2 3"); }
inline Tree star4() { return treepoly::parse_tree("0 1\n0 2\n0 3"); }
inline Tree path2() { return treepoly::parse_tree("0 1"); }

inline Tree random_tree(int n, std::mt19937& rng)
{
    std::vector<int> seq;
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i + 2 < n; ++i)
        seq.push_back(pick(rng));
    return oracle::tree_from_pruefer(n, seq);
}

inline std::vector<int> random_parts(std::mt19937& rng, int len, int max_part)
{
    std::uniform_int_distribution<int> pick(1, max_part);
    std::vector<int> out;
    for (int i = 0; i < len; ++i)
        out.push_back(pick(rng));
    return out;
}

} // namespace testing_support
