#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treepoly/csf.hpp"
#include "treepoly/degree_poly.hpp"
#include "treepoly/rational_matrix.hpp"
#include "treepoly/subtree_census.hpp"

namespace treepoly {

// --- power-sum CSF -> generalized degree polynomial -------------------------

/// omega(lambda, a, b, c) = (-1)^(n-b-1) sum_{mu |- a} C(a - l(mu), c) C(lambda; mu)
///                          C(n - l(lambda) + l(mu) - a, n - b - c - 1)
/// with out-of-range binomials read as 0. Throws DomainError if lambda |- n fails.
Int omega(const Partition& lambda, int n, int a, int b, int c);

/// g(a, b, c) = sum_lambda c_lambda omega(lambda, a, b, c), assembled over x, y, z.
GdpPoly gdp_from_csf(const PsumCsf& csf);

/// Entry b is the number of vertices of degree b, for b = 0..n-1.
std::vector<Int> degree_sequence_from_csf(const PsumCsf& csf);

// --- half-generalized degree polynomial <-> subtree polynomial --------------

using IndexPair = std::pair<int, int>;

/// Coefficient vectors of an n-vertex tree. h(a, b) counts subtrees with
/// a = e(S) internal edges and b = d(S) boundary edges; s(i, j) counts
/// subtrees with i edges and j leaf edges.
struct BridgeVectors {
    int n = 0;
    std::vector<Int> h1;  // h(0, b), b = 0..n-1
    std::vector<Int> h2;  // h(a, b), 1 <= a, b, a + b <= n-1, by (a, b) ascending
    std::vector<Int> s1;  // s(k, k), k = 0..n-1
    std::vector<Int> s2;  // s(i, j), 2 <= j <= i <= n-1, by (i, j) ascending
};

/// Matrices of the linear system between the vectors above. Rows of M and N
/// are the equations indexed by (a, k), 1 <= a, k, a + k <= n-1, ordered by
/// (a, k) ascending:
///   sum_b C(b, k) h(a, b) = sum_j C(j, k) s(a + k, j).
struct BridgeMatrices {
    int n = 0;
    RationalMatrix p;  // [C(j, i)], i, j = 0..n-1
    RationalMatrix m;
    RationalMatrix nmat;
    std::vector<IndexPair> row_keys;  // (a, k)
    std::vector<IndexPair> h2_keys;   // (a, b)
    std::vector<IndexPair> s2_keys;   // (i, j)
    /// Row order that puts N in block-diagonal form: by (a + k, a) ascending.
    std::vector<std::size_t> n_block_order;

    /// M_a blocks (a = 1..n-2), read off the (a, k) row order.
    std::vector<RationalMatrix> m_blocks() const;
    /// N_i blocks (i = 2..n-1), read off the (a + k, a) row order.
    std::vector<RationalMatrix> n_blocks() const;
};

std::vector<IndexPair> h2_index(int n);
std::vector<IndexPair> s2_index(int n);

/// Throws DomainError when a coefficient sits outside the ranges a tree's
/// polynomials can occupy (a malformed input polynomial).
BridgeVectors extract_vectors(const HdpPoly& hdp, const StpPoly& stp, int n);

BridgeMatrices build_matrices(int n);

/// The a = 0, k = 1 equation counts each single-edge subtree twice (once per
/// endpoint); the valid relation is sum_b b h(0, b) = 2 s(1, 1). This is P
/// with row 1 halved, used by the conversions.
RationalMatrix corrected_p(int n);

struct BridgeReport {
    int n = 0;
    bool p_identity = false;             // P H1 == S1, every row
    std::vector<int> p_failing_rows;
    std::vector<Fraction> p_lhs;         // P H1
    std::vector<Int> s1;
    bool corrected_p_identity = false;   // corrected_p H1 == S1
    bool mn_identity = false;            // M H2 == N S2
    std::vector<Fraction> m_h2;
    std::vector<Fraction> n_s2;
    bool stp_roundtrip = false;          // stp_from_hdp(hdp) == stp
    bool hdp_roundtrip = false;          // hdp_from_stp(stp) == hdp

    bool all_hold() const
    {
        return p_identity && corrected_p_identity && mn_identity && stp_roundtrip && hdp_roundtrip;
    }
    std::string to_json() const;
};

BridgeReport verify_bridge(const Tree& t);

/// Solves the systems with exact fractions. Throws DomainError if a solution
/// is not integral (the input is not the polynomial of any tree).
StpPoly stp_from_hdp(const HdpPoly& hdp, int n);
HdpPoly hdp_from_stp(const StpPoly& stp, int n);

} // namespace treepoly
