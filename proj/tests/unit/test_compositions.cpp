#include "support.hpp"

#include "treepoly/canonical.hpp"
#include "treepoly/caterpillar.hpp"
#include "treepoly/composition_ops.hpp"
#include "treepoly/degree_poly.hpp"
#include "treepoly/factorization.hpp"
#include "treepoly/families.hpp"
#include "treepoly/hbar.hpp"
#include "treepoly/polarized.hpp"
#include "treepoly/subtree_census.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace treepoly;

namespace {

Composition random_composition(std::mt19937& rng, int max_len, int max_part)
{
    std::uniform_int_distribution<int> len(1, max_len);
    return Composition(testing_support::random_parts(rng, len(rng), max_part));
}

SparsePoly hbar_var(int n, const std::string& name) { return SparsePoly::variable(vars::hbar(n), name); }

const Composition kAlpha{1, 2, 1, 3, 2};
const Composition kBeta{1, 3, 2, 1, 2};

PolarizedTree polarized_example()
{
    return PolarizedTree(Tree(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {1, 6}, {2, 7}, {7, 8}, {7, 9}}), 0, 3);
}

} // namespace

TEST(CompositionOps, Examples)
{
    EXPECT_EQ(compose(Composition{1, 2}, Composition{1, 2}), kAlpha);
    EXPECT_EQ(compose(Composition{2, 1}, Composition{1, 2}), kBeta);
    EXPECT_EQ(concat(Composition{1, 2}, Composition{3}), (Composition{1, 2, 3}));
    EXPECT_EQ(near_concat(Composition{1, 2}, Composition{3, 1}), (Composition{1, 5, 1}));
    EXPECT_EQ(near_concat(Composition{}, Composition{3}), (Composition{3}));
    EXPECT_EQ(odot_power(Composition{1, 2}, 3), (Composition{1, 3, 3, 2}));
    EXPECT_EQ(pad_ones(Composition{1, 2, 1, 3, 2}), (Composition{2, 2, 1, 3, 3}));
    EXPECT_EQ(compose(Composition{1}, kAlpha), kAlpha);
}

TEST(CompositionOps, ConcatIdentityOnRandomTriples)
{
    std::mt19937 rng(500);
    for (int trial = 0; trial < 500; ++trial) {
        auto a = random_composition(rng, 4, 3);
        auto g = random_composition(rng, 4, 3);
        auto b = random_composition(rng, 4, 3);
        EXPECT_EQ(compose(concat(a, g), b), concat(compose(a, b), compose(g, b)));
    }
}

TEST(CompositionOps, IdentitiesExhaustive)
{
    for (int n = 1; n <= 7; ++n)
        for (int m = 1; m <= 6; ++m)
            for (const auto& a : compositions_of(n))
                for (const auto& b : compositions_of(m)) {
                    if (a.length() + b.length() > 12)
                        continue;
                    auto ab = compose(a, b);
                    EXPECT_EQ(ab.reversed(), compose(a.reversed(), b.reversed()));
                    EXPECT_EQ(ab.sum(), a.sum() * b.sum());
                    for (const auto& g : {Composition{1}, Composition{2, 1}}) {
                        EXPECT_EQ(compose(concat(a, g), b), concat(ab, compose(g, b)));
                        EXPECT_EQ(compose(near_concat(a, g), b), near_concat(ab, compose(g, b)));
                    }
                }
}

TEST(CoarseningSum, BinomialIdentityUpToLength12)
{
    const auto y = SparsePoly::variable(vars::hdp, "y");
    const auto z = SparsePoly::variable(vars::hdp, "z");
    std::mt19937 rng(14);
    for (int len = 1; len <= 12; ++len) {
        Composition alpha(testing_support::random_parts(rng, len, 3));
        SparsePoly sum(vars::hdp);
        for_each_coarsening(alpha, [&](const Composition& g) {
            std::vector<int> e{g.length() - 1, len - g.length()};
            sum.add_term(e, 1);
        });
        EXPECT_EQ(sum, (y + z).pow(static_cast<unsigned>(len - 1))) << len;
    }
}

TEST(Hbar, SinglePart)
{
    for (int a = 1; a <= 6; ++a) {
        auto h = hbar(Composition{a});
        EXPECT_EQ(h.denom_exp, 0);
        EXPECT_EQ(h.cleared, hbar_var(a, "x" + std::to_string(a)));
    }
}

TEST(Hbar, ExampleClassesAgree)
{
    EXPECT_TRUE(hbar_equal(hbar(kAlpha), hbar(kBeta)));
    EXPECT_FALSE(hbar_equal(hbar(Composition{1, 2, 3}), hbar(Composition{2, 1, 3})));
}

TEST(Hbar, InvariantUnderReversal)
{
    std::mt19937 rng(200);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_composition(rng, 9, 4);
        EXPECT_TRUE(hbar_equal(hbar(a), hbar(a.reversed())));
        EXPECT_EQ(hbar(a).cleared, hbar(a.reversed()).cleared);
    }
}

TEST(Hbar, LengthCap)
{
    Composition long_one(std::vector<int>(kHbarMaxLength + 1, 1));
    EXPECT_THROW(hbar(long_one), DomainError);
    EXPECT_THROW(lpoly(long_one), DomainError);
}

TEST(HbarSpecialize, StarAndExample)
{
    const auto y = SparsePoly::variable(vars::hdp, "y");
    const auto z = SparsePoly::variable(vars::hdp, "z");
    for (int a = 1; a <= 6; ++a) {
        EXPECT_EQ(hbar_specialize(Composition{a}), (y + z).pow(static_cast<unsigned>(a + 1)));
        EXPECT_EQ(hbar_specialize(Composition{a}), uhdp(cat(Composition{a + 2})));
    }
    EXPECT_EQ(hbar_specialize(kAlpha), uhdp(cat(Composition{2, 2, 1, 3, 3})));
}

TEST(HbarSpecialize, AllCompositionsUpTo10)
{
    for (int n = 1; n <= 10; ++n)
        for (const auto& alpha : compositions_of(n)) {
            auto t = cat(pad_ones(alpha));
            auto spec = hbar_specialize(alpha);
            ASSERT_EQ(spec, uhdp(t)) << alpha.to_string();
            auto with_leaves = spec + SparsePoly::variable(vars::hdp, "y") * t.leaf_count();
            EXPECT_EQ(with_leaves, hdp(t));
        }
}

TEST(HbarRecurrence, SmallCase)
{
    EXPECT_TRUE(hbar_recurrence_check(Composition{1}, Composition{2}));
    EXPECT_TRUE(uhdp_recurrence_check(Composition{1}, Composition{2}));
}

TEST(HbarRecurrence, RandomPairs)
{
    std::mt19937 rng(62);
    for (int trial = 0; trial < 500; ++trial) {
        auto a = random_composition(rng, 7, 4);
        auto b = random_composition(rng, 7, 4);
        EXPECT_TRUE(hbar_recurrence_check(a, b)) << a.to_string() << " | " << b.to_string();
    }
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_composition(rng, 4, 3);
        auto b = random_composition(rng, 4, 3);
        EXPECT_TRUE(uhdp_recurrence_check(a, b)) << a.to_string() << " | " << b.to_string();
    }
}

TEST(Factorization, Examples)
{
    auto fa = irreducible_factorization(kAlpha);
    EXPECT_EQ(fa.factors, (std::vector<Composition>{{1, 2}, {1, 2}}));
    EXPECT_EQ(fa.to_string(), "(1,2) o (1,2)");
    auto fb = irreducible_factorization(kBeta);
    EXPECT_EQ(fb.factors, (std::vector<Composition>{{2, 1}, {1, 2}}));
    EXPECT_EQ(irreducible_factorization(Composition{2}).factors, (std::vector<Composition>{{2}}));
}

TEST(Factorization, Nontriviality)
{
    EXPECT_TRUE(is_nontrivial({{1, 2}, {1, 2}}));
    EXPECT_FALSE(is_nontrivial({{1}, {1, 2}}));
    EXPECT_FALSE(is_nontrivial({{2}, {3}}));
    EXPECT_FALSE(is_nontrivial({{1, 1}, {1, 1, 1}}));
    EXPECT_TRUE(is_nontrivial({{2}, {1, 1}}));
}

TEST(Factorization, RecomposesAndIsUniqueUpTo12)
{
    for (int n = 1; n <= 12; ++n)
        for (const auto& alpha : compositions_of(n)) {
            Factorization f;
            ASSERT_NO_THROW(f = irreducible_factorization(alpha)) << alpha.to_string();
            EXPECT_EQ(f.compose_all(), alpha);
            EXPECT_TRUE(alpha == Composition{1} || is_nontrivial(f.factors)) << alpha.to_string();
            for (const auto& factor : f.factors)
                EXPECT_EQ(irreducible_factorization(factor).factors.size(), 1u) << factor.to_string();
        }
}

TEST(Factorization, SwitchedFactorsRefactorize)
{
    std::mt19937 rng(4);
    for (int n = 4; n <= 12; ++n)
        for (const auto& alpha : compositions_of(n)) {
            auto f = irreducible_factorization(alpha);
            if (f.factors.size() < 2)
                continue;
            auto switched = f.factors;
            for (auto& factor : switched)
                if (rng() % 2)
                    factor = factor.reversed();
            Factorization g{switched};
            EXPECT_EQ(irreducible_factorization(g.compose_all()).factors, switched) << alpha.to_string();
        }
}

TEST(SwitchingClass, Example)
{
    auto cls = switching_class(kAlpha);
    EXPECT_EQ(cls, (std::set<Composition>{{1, 2, 1, 3, 2}, {1, 3, 2, 1, 2}, {2, 1, 2, 3, 1}, {2, 3, 1, 2, 1}}));
    EXPECT_EQ(switching_class(kAlpha, true).size(), 2u);
}

TEST(SwitchingClass, PalindromicFactorsGiveSingleton)
{
    for (int n = 1; n <= 10; ++n)
        for (const auto& alpha : compositions_of(n)) {
            auto f = irreducible_factorization(alpha);
            bool all_pal = std::all_of(f.factors.begin(), f.factors.end(),
                                       [](const Composition& c) { return c.is_palindrome(); });
            if (all_pal) {
                EXPECT_EQ(switching_class(alpha), std::set<Composition>{alpha}) << alpha.to_string();
            }
        }
}

TEST(SwitchingClass, LowerBoundOnReversalClasses)
{
    for (int n = 1; n <= 12; ++n)
        for (const auto& alpha : compositions_of(n)) {
            auto f = irreducible_factorization(alpha);
            int q = static_cast<int>(std::count_if(f.factors.begin(), f.factors.end(),
                                                   [](const Composition& c) { return !c.is_palindrome(); }));
            if (q == 0)
                continue;
            EXPECT_GE(switching_class(alpha, true).size(), std::size_t{1} << (q - 1)) << alpha.to_string();
            EXPECT_GE(switching_class(alpha).size(), std::size_t{1} << q) << alpha.to_string();
        }
}

TEST(SwitchingClass, MembersShareHbarHdpAndStpUpTo12)
{
    for (int n = 1; n <= 12; ++n)
        for (const auto& alpha : compositions_of(n)) {
            auto cls = switching_class(alpha);
            if (cls.size() < 2 || *cls.begin() != alpha)
                continue;
            const auto hb = hbar(alpha);
            const auto t0 = cat(pad_ones(alpha));
            const auto h0 = hdp(t0);
            const auto s0 = stp(t0);
            for (const auto& beta : cls) {
                EXPECT_TRUE(hbar_equal(hbar(beta), hb)) << beta.to_string();
                auto t = cat(pad_ones(beta));
                EXPECT_EQ(hdp(t), h0) << beta.to_string();
                EXPECT_EQ(stp(t), s0) << beta.to_string();
            }
        }
}

TEST(EisenstatGordon, ElevenVertexPair)
{
    auto pair = eisenstat_gordon({1, 1, 0, 1}, 1, 2);
    EXPECT_EQ(pair.first, (Composition{2, 3, 2, 1, 3}));
    EXPECT_EQ(pair.second, (Composition{3, 3, 1, 2, 2}));
    auto f2a = cat(Composition{2, 2, 1, 3, 3});
    auto f2b = cat(Composition{2, 3, 2, 1, 3});
    std::set<CanonicalCode> want{canonical_code(f2a), canonical_code(f2b)};
    std::set<CanonicalCode> got{canonical_code(pair.first_tree), canonical_code(pair.second_tree)};
    EXPECT_EQ(got, want);
    EXPECT_EQ(hdp(pair.first_tree), hdp(pair.second_tree));
    EXPECT_EQ(stp(pair.first_tree), stp(pair.second_tree));
}

// With p = 1 the two lists are reverses of each other.
TEST(EisenstatGordon, ConstantPolynomialGivesReversedDoubleStars)
{
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            auto pair = eisenstat_gordon({1}, a, b);
            EXPECT_EQ(pair.first, (Composition{a + 1, b + 1}));
            EXPECT_EQ(pair.second, (Composition{b + 1, a + 1}));
            EXPECT_TRUE(isomorphic(pair.first_tree, pair.second_tree));
            EXPECT_EQ(stp(pair.first_tree), stp(pair.second_tree));
        }
}

TEST(EisenstatGordon, GapFreeAndErrors)
{
    EXPECT_TRUE(is_gap_free({1, 1, 0, 1}));
    EXPECT_TRUE(is_gap_free({1}));
    EXPECT_FALSE(is_gap_free({1, 0, 0, 1}));
    EXPECT_FALSE(is_gap_free({0, 1}));
    EXPECT_FALSE(is_gap_free({1, 1, 0}));
    EXPECT_FALSE(is_gap_free({1, 2, 1}));
    EXPECT_THROW(eisenstat_gordon({1, 0, 0, 1}, 1, 2), DomainError);
    EXPECT_THROW(eisenstat_gordon({1, 1}, 0, 2), DomainError);
    EXPECT_THROW(eisenstat_gordon({1, 1}, 1, -2), DomainError);
}

TEST(EisenstatGordon, RandomGapFreePolynomialsShareHdp)
{
    std::mt19937 rng(77);
    int done = 0;
    while (done < 60) {
        std::uniform_int_distribution<int> deg(0, 5), coin(0, 1), ab(1, 3);
        std::vector<int> p(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& c : p)
            c = coin(rng);
        p.front() = p.back() = 1;
        if (!is_gap_free(p))
            continue;
        const int a = ab(rng), b = ab(rng);
        auto pair = eisenstat_gordon(p, a, b);
        EXPECT_EQ(hdp(pair.first_tree), hdp(pair.second_tree));
        auto beta = eisenstat_gordon_beta(p);
        EXPECT_TRUE(isomorphic(pair.first_tree, cat(pad_ones(compose(beta, Composition{a, b})))));
        ++done;
    }
}

TEST(Lpoly, Example)
{
    auto vs = vars::indexed_x(3);
    auto x1 = SparsePoly::variable(vs, "x1");
    auto x2 = SparsePoly::variable(vs, "x2");
    auto x3 = SparsePoly::variable(vs, "x3");
    EXPECT_EQ(lpoly(Composition{1, 2}), x1 * x2 + x3);
}

TEST(Lpoly, RoundTripAndReversalUpTo10)
{
    for (int n = 1; n <= 10; ++n)
        for (const auto& alpha : compositions_of(n)) {
            auto l = lpoly(alpha);
            EXPECT_EQ(l, lpoly(alpha.reversed()));
            auto back = hbar_from_lpoly(l);
            auto direct = hbar(alpha);
            EXPECT_EQ(back.denom_exp, direct.denom_exp);
            EXPECT_EQ(back.cleared, direct.cleared) << alpha.to_string();
        }
}

TEST(Families, SingleVertexGivesElevenVertexPair)
{
    auto family = theorem7_family(kAlpha, PolarizedTree::single_vertex());
    ASSERT_EQ(family.size(), 2u);
    std::set<CanonicalCode> got{canonical_code(family[0]), canonical_code(family[1])};
    std::set<CanonicalCode> want{canonical_code(cat(Composition{2, 2, 1, 3, 3})),
                                 canonical_code(cat(Composition{2, 3, 2, 1, 3}))};
    EXPECT_EQ(got, want);
    EXPECT_EQ(hdp(family[0]), hdp(family[1]));
}

TEST(Families, SingleEdgeBaseIsCaterpillarFamily)
{
    auto family = theorem7_family(Composition{1, 2}, PolarizedTree::path(2));
    for (const auto& t : family) {
        EXPECT_TRUE(is_caterpillar(t));
        EXPECT_EQ(hdp(t), hdp(family.front()));
    }
}

TEST(Families, TenVertexBaseWithRaisedCap)
{
    auto a = polarized_example();
    EXPECT_THROW(theorem7_family(Composition{1, 2}, a), DomainError);
    auto family = theorem7_family(Composition{1, 2}, a, 40);
    ASSERT_EQ(family.size(), 2u);
    EXPECT_EQ(family[0].size(), 32);
    EXPECT_FALSE(isomorphic(family[0], family[1]));
    EXPECT_EQ(hdp(family[0]), hdp(family[1]));
    EXPECT_EQ(stp(family[0]), stp(family[1]));
}

TEST(Families, PalindromeGivesSingleton)
{
    EXPECT_EQ(theorem7_family(Composition{1, 2, 1}, PolarizedTree::path(2)).size(), 1u);
    EXPECT_EQ(theorem7_family(Composition{2, 1, 2}, PolarizedTree::single_vertex()).size(), 1u);
}

TEST(Families, GeneralizedSpecializationFormula)
{
    // uhdp(cap(alpha o T)) = Hbar(alpha) with x_i -> uhdp(cap(T^(.)i))
    std::vector<PolarizedTree> bases{PolarizedTree::single_vertex(), PolarizedTree::path(2),
                                     PolarizedTree::path(3),
                                     PolarizedTree(testing_support::star4(), 1, 0)};
    for (int n = 1; n <= 5; ++n)
        for (const auto& alpha : compositions_of(n))
            for (const auto& base : bases) {
                const int nv = alpha.sum();
                const auto vs = vars::hbar(nv);
                auto h = hbar(alpha);
                SparsePoly value = h.cleared;
                for (int i = 1; i <= nv; ++i)
                    value = value.substitute("x" + std::to_string(i), uhdp(cap(odot_power(base, i))).embed(vs));
                auto yz = SparsePoly::variable(vs, "y") + SparsePoly::variable(vs, "z");
                auto got = value.divide_exact(yz.pow(static_cast<unsigned>(h.denom_exp)));
                EXPECT_EQ(got, uhdp(cap(compose_tree(alpha, base))).embed(vs)) << alpha.to_string();
            }
}
