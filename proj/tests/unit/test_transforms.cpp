#include "support.hpp"

#include "treepoly/csf.hpp"
#include "treepoly/degree_poly.hpp"
#include "treepoly/free_trees.hpp"
#include "treepoly/subtree_census.hpp"
#include "treepoly/transforms.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

using namespace treepoly;
using testing_support::path4;
using testing_support::star4;

namespace {

template <class Visit>
void for_each_tree_between(int lo, int hi, Visit visit)
{
    for (int n = lo; n <= hi; ++n)
        for_each_free_tree(n, visit);
}

std::vector<Fraction> fractions(const std::vector<Int>& v)
{
    std::vector<Fraction> out;
    for (auto x : v)
        out.emplace_back(static_cast<long>(x));
    return out;
}

} // namespace

TEST(Omega, SinglePartEmptySet)
{
    for (int n = 1; n <= 12; ++n)
        EXPECT_EQ(omega(Partition({n}), n, 0, 0, 0), n % 2 == 1 ? 1 : -1) << n;
}

TEST(Omega, PathFourCombinations)
{
    auto c = csf_powersum(path4());
    Int empty = 0, pairs = 0;
    for (const auto& [lambda, v] : c.coeffs) {
        empty += v * omega(lambda, 4, 0, 0, 0);
        pairs += v * omega(lambda, 4, 2, 1, 1);
    }
    EXPECT_EQ(empty, 1);
    EXPECT_EQ(pairs, 2);
}

TEST(Omega, MatchesLiteralSummationUpTo8)
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int a = 0; a <= n; ++a)
                for (int b = 0; b <= n; ++b)
                    for (int c = 0; c <= n; ++c)
                        ASSERT_EQ(omega(lambda, n, a, b, c), oracle::omega_literal(lambda, n, a, b, c))
                            << lambda.to_string() << " " << a << " " << b << " " << c;
}

TEST(Omega, RejectsMismatchedPartition)
{
    EXPECT_THROW(omega(Partition({2, 1}), 4, 0, 0, 0), DomainError);
}

TEST(GdpFromCsf, PathAndStar)
{
    EXPECT_EQ(gdp_from_csf(csf_powersum(path4())), gdp(path4()));
    EXPECT_EQ(gdp_from_csf(csf_powersum(star4())), gdp(star4()));
}

TEST(GdpFromCsf, AllFreeTreesUpTo8)
{
    for_each_tree_between(1, 8, [](const Tree& t) {
        ASSERT_EQ(gdp_from_csf(csf_powersum(t)), oracle::gdp_by_subsets(t)) << t.to_edge_list();
    });
}

TEST(DegreeSequenceFromCsf, PathAndStar)
{
    EXPECT_EQ(degree_sequence_from_csf(csf_powersum(star4())), (std::vector<Int>{0, 3, 0, 1}));
    EXPECT_EQ(degree_sequence_from_csf(csf_powersum(path4())), (std::vector<Int>{0, 2, 2, 0}));
}

TEST(DegreeSequenceFromCsf, AllFreeTreesUpTo10)
{
    for_each_tree_between(1, 10, [](const Tree& t) {
        ASSERT_EQ(degree_sequence_from_csf(csf_powersum(t)), oracle::degree_counts(t)) << t.to_edge_list();
    });
}

TEST(BridgeVectors, PathFourVectors)
{
    auto v = extract_vectors(hdp(path4()), stp(path4()), 4);
    EXPECT_EQ(v.h2, (std::vector<Int>{2, 1, 2}));
    EXPECT_EQ(v.s2, (std::vector<Int>{2, 1, 0}));
    EXPECT_EQ(v.h1, (std::vector<Int>{0, 2, 2, 0}));
    EXPECT_EQ(v.s1, (std::vector<Int>{4, 3, 2, 0}));
}

TEST(BridgeVectors, StarFourVectors)
{
    auto v = extract_vectors(hdp(star4()), stp(star4()), 4);
    EXPECT_EQ(v.h2, (std::vector<Int>{0, 3, 3}));
    EXPECT_EQ(v.s2, (std::vector<Int>{3, 0, 1}));
}

TEST(BridgeVectors, IndexConventions)
{
    EXPECT_EQ(h2_index(5), (std::vector<IndexPair>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}));
    EXPECT_EQ(s2_index(5), (std::vector<IndexPair>{{2, 2}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {4, 4}}));
}

TEST(BridgeVectors, ReconstructPolynomials)
{
    for_each_tree_between(2, 9, [](const Tree& t) {
        const int n = t.size();
        auto v = extract_vectors(hdp(t), stp(t), n);
        HdpPoly h(vars::hdp);
        for (int b = 0; b < n; ++b) {
            std::vector<int> e{b, 0};
            h.add_term(e, v.h1[b]);
        }
        auto hk = h2_index(n);
        for (std::size_t i = 0; i < hk.size(); ++i) {
            std::vector<int> e{hk[i].second, hk[i].first};
            h.add_term(e, v.h2[i]);
        }
        std::vector<int> top{0, n - 1};
        h.add_term(top, 1);
        EXPECT_EQ(h, hdp(t));

        StpPoly s(vars::stp);
        // s(k, k) for k >= 2 sits in both vectors.
        for (int k = 0; k < std::min(n, 2); ++k) {
            std::vector<int> e{k, k};
            s.add_term(e, v.s1[k]);
        }
        auto sk = s2_index(n);
        for (std::size_t i = 0; i < sk.size(); ++i) {
            std::vector<int> e{sk[i].first, sk[i].second};
            s.add_term(e, v.s2[i]);
            if (sk[i].first == sk[i].second) {
                EXPECT_EQ(v.s1[sk[i].first], v.s2[i]);
            }
        }
        EXPECT_EQ(s, stp(t));
        EXPECT_EQ(v.s1[0], n);
        EXPECT_EQ(v.s1[1], n - 1);
        for (auto x : v.h1)
            EXPECT_GE(x, 0);
        for (auto x : v.h2)
            EXPECT_GE(x, 0);
    });
}

TEST(BridgeVectors, MalformedInputIsRejected)
{
    auto h = hdp(path4());
    std::vector<int> bad{5, 0};
    h.add_term(bad, 1);
    EXPECT_THROW(extract_vectors(h, stp(path4()), 4), DomainError);
}

TEST(BridgeMatrices, FourVertexSystem)
{
    auto bm = build_matrices(4);
    EXPECT_EQ(bm.m, RationalMatrix::from_integers({{1, 2, 0}, {0, 1, 0}, {0, 0, 1}}));
    EXPECT_EQ(bm.nmat, RationalMatrix::from_integers({{2, 0, 0}, {0, 1, 3}, {0, 2, 3}}));
    auto v = extract_vectors(hdp(path4()), stp(path4()), 4);
    auto lhs = bm.m * fractions(v.h2);
    EXPECT_EQ(lhs, fractions({4, 1, 2}));
    EXPECT_EQ(bm.nmat * fractions(v.s2), lhs);
    auto w = extract_vectors(hdp(star4()), stp(star4()), 4);
    EXPECT_EQ(bm.m * fractions(w.h2), bm.nmat * fractions(w.s2));
}

TEST(BridgeMatrices, FiveVertexDisplays)
{
    auto bm = build_matrices(5);
    auto m = RationalMatrix::from_integers({{1, 2, 3, 0, 0, 0}, {0, 1, 3, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                                            {0, 0, 0, 1, 2, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}});
    auto n = RationalMatrix::from_integers({{2, 0, 0, 0, 0, 0}, {0, 1, 3, 0, 0, 0}, {0, 0, 0, 0, 1, 4},
                                            {0, 2, 3, 0, 0, 0}, {0, 0, 0, 1, 3, 6}, {0, 0, 0, 2, 3, 4}});
    EXPECT_EQ(bm.m, m);
    EXPECT_EQ(bm.nmat, n);
    EXPECT_EQ(bm.row_keys, (std::vector<IndexPair>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}));

    // Same system with rows sorted by (a + k, a).
    auto m_block = RationalMatrix::from_integers({{1, 2, 3, 0, 0, 0}, {0, 1, 3, 0, 0, 0}, {0, 0, 0, 1, 2, 0},
                                                  {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}});
    auto n_block = RationalMatrix::from_integers({{2, 0, 0, 0, 0, 0}, {0, 1, 3, 0, 0, 0}, {0, 2, 3, 0, 0, 0},
                                                  {0, 0, 0, 0, 1, 4}, {0, 0, 0, 1, 3, 6}, {0, 0, 0, 2, 3, 4}});
    EXPECT_EQ(bm.m.rows_permuted(bm.n_block_order), m_block);
    EXPECT_EQ(bm.nmat.rows_permuted(bm.n_block_order), n_block);
}

TEST(BridgeMatrices, FiveVertexBlockDeterminantsAreNegative)
{
    auto blocks = build_matrices(5).n_blocks();
    ASSERT_EQ(blocks.size(), 3u);
    EXPECT_EQ(mat_det(blocks[0]), Fraction(2));
    EXPECT_EQ(mat_det(blocks[1]), Fraction(-3));
    EXPECT_EQ(mat_det(blocks[2]), Fraction(-4));
}

TEST(BridgeMatrices, DeterminantsUpTo12)
{
    auto bm = build_matrices(13);
    auto nb = bm.n_blocks();
    ASSERT_EQ(nb.size(), 11u);
    for (std::size_t k = 0; k < nb.size(); ++k) {
        const long i = static_cast<long>(k) + 2;
        EXPECT_EQ(abs(mat_det(nb[k])), Fraction(i)) << i;
    }
    for (const auto& mb : bm.m_blocks())
        EXPECT_EQ(abs(mat_det(mb)), Fraction(1));
    EXPECT_EQ(mat_det(bm.p), Fraction(1));
    for (int n = 3; n <= 9; ++n) {
        Fraction fact = 1;
        for (int i = 2; i <= n - 1; ++i)
            fact *= i;
        EXPECT_EQ(abs(mat_det(build_matrices(n).nmat)), fact) << n;
    }
}

TEST(BridgeMatrices, PIsUnitriangularBinomial)
{
    auto p = build_matrices(7).p;
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j)
            EXPECT_EQ(p(i, j), Fraction(static_cast<long>(oracle::binom(static_cast<int>(j), static_cast<int>(i)))));
}

// The a = 0, k = 1 equation double counts single-edge subtrees.
TEST(VerifyBridge, LiteralPIdentityFailsOnlyAtRowOne)
{
    for_each_tree_between(2, 9, [](const Tree& t) {
        const int n = t.size();
        auto r = verify_bridge(t);
        EXPECT_FALSE(r.p_identity);
        EXPECT_EQ(r.p_failing_rows, (std::vector<int>{1}));
        EXPECT_EQ(r.p_lhs[1], Fraction(2 * (n - 1)));
        EXPECT_EQ(r.s1[1], n - 1);
        EXPECT_TRUE(r.corrected_p_identity);
        EXPECT_TRUE(r.mn_identity);
        EXPECT_TRUE(r.stp_roundtrip);
        EXPECT_TRUE(r.hdp_roundtrip);
        EXPECT_FALSE(r.all_hold());
    });
}

TEST(VerifyBridge, SingleVertexHolds)
{
    auto r = verify_bridge(Tree());
    EXPECT_TRUE(r.all_hold());
}

TEST(VerifyBridge, ReportJson)
{
    auto j = nlohmann::json::parse(verify_bridge(path4()).to_json());
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(j["p_identity"], false);
    EXPECT_EQ(j["mn_identity"], true);
}

TEST(Conversions, RoundTripUpTo9)
{
    for_each_tree_between(1, 9, [](const Tree& t) {
        const int n = t.size();
        auto h = hdp(t);
        auto s = stp(t);
        ASSERT_EQ(stp_from_hdp(h, n), s) << t.to_edge_list();
        ASSERT_EQ(hdp_from_stp(s, n), h) << t.to_edge_list();
    });
}

TEST(Conversions, NonIntegralSolutionIsRejected)
{
    // One extra (e, d) = (1, 1) subtree forces 2 s(2, 2) = 5.
    auto h = hdp(path4());
    std::vector<int> e{1, 1};
    h.add_term(e, 1);
    EXPECT_THROW(stp_from_hdp(h, 4), DomainError);
}
