#include "generators.hpp"

#include <ekr/bounds.hpp>
#include <ekr/extremal.hpp>

#include <gtest/gtest.h>

using namespace ekr;

TEST(GrassmannBounds, Examples)
{
    EXPECT_EQ(bound_grassmann_general(4, 2, 2, 7).value, 56);
    EXPECT_EQ(bound_grassmann_refined(4, 2, 2, 7).value, 56);
    EXPECT_EQ(bound_grassmann_refined(6, 3, 2, 15).value, 465);
    EXPECT_GE(bound_grassmann_general(6, 3, 2, 15).value, 465);
    EXPECT_EQ(bound_grassmann_general(6, 3, 2, 15).value, make_rat(26175, 31));
    // all 7 lines of F_2^3: I = 7
    EXPECT_GE(bound_grassmann_general(3, 1, 2, 7).value, 7);
    const auto r = bound_grassmann_refined(6, 2, 3, 121);
    ASSERT_TRUE(r.valid);
    EXPECT_GE(r.value, BigRat(star_value(6, 2, 1, 3)));
}

TEST(GrassmannBounds, RefinedFlagsOutsideItsRange)
{
    const auto big_m = bound_grassmann_refined(4, 2, 2, 8);
    EXPECT_FALSE(big_m.valid);
    EXPECT_EQ(big_m.flags, std::vector<std::string>{"requires M <= [n-1 k-1]"});
    EXPECT_FALSE(bound_grassmann_refined(5, 3, 2, 3).valid);
    EXPECT_FALSE(bound_grassmann_general(1, 1, 2, 1).valid);
    EXPECT_THROW(bound_grassmann_general(4, 2, 2, 36), std::domain_error);
}

TEST(GrassmannBounds, RefinedIsNeverWeakerWhereItApplies)
{
    for (int q : {2, 3, 4})
        for (int n = 4; n <= 9; ++n)
            for (int k = 2; 2 * k <= n; ++k) {
                const BigInt top = gaussian_binomial(n - 1, k - 1, q);
                for (BigInt m = 1; m <= top; m += 1 + top / 17) {
                    const auto g = bound_grassmann_general(n, k, q, m);
                    const auto r = bound_grassmann_refined(n, k, q, m);
                    ASSERT_TRUE(r.valid);
                    ASSERT_LE(r.value, g.value) << n << k << q << " M=" << m;
                }
            }
}

TEST(SymmetricBound, Examples)
{
    EXPECT_EQ(bound_symmetric(3, 2).value, 8);
    EXPECT_EQ(bound_symmetric(4, 6).value, 72);
    EXPECT_EQ(bound_symmetric(5, 24).value, 1152);
    EXPECT_EQ(bound_symmetric(3, 6).value, 36);
    for (int n = 2; n <= 9; ++n) EXPECT_EQ(bound_symmetric(n, factorial(n - 1)).value, BigRat(2 * factorial(n - 1) * factorial(n - 1)));
}

TEST(DualBounds, StarAndSingleton)
{
    const auto g = enumerate_subspaces(4, 2, 2);
    const auto t = grassmann_tables(4, 2, 2);
    const auto star = full_t_star(g, Subspace(4, 2, {{1, 0, 0, 0}}));
    const auto d = dual_distribution(t, inner_distribution(t, g, star), star.size());
    const auto b = bound_grassmann_dual_b1(4, 2, 2, d, 7);
    EXPECT_GE(b.from_b1, 56);
    EXPECT_EQ(b.from_b1, b.from_tail);
    const Family one(g.descriptor(), {9});
    const auto d1 = dual_distribution(t, inner_distribution(t, g, one), 1);
    EXPECT_GE(bound_grassmann_dual_b1(4, 2, 2, d1, 1).from_b1, 2);
}

TEST(DualBounds, DominateRandomFamilies)
{
    gen::Rng rng(61);
    for (auto [n, k, q] : std::vector<std::array<int, 3>>{{4, 2, 2}, {5, 2, 2}, {4, 1, 3}}) {
        const auto g = enumerate_subspaces(n, k, q);
        const auto t = grassmann_tables(n, k, q);
        for (int trial = 0; trial < 100; ++trial) {
            const auto f = gen::family(rng, g, 1, g.size());
            const auto d = dual_distribution(t, inner_distribution(t, g, f), f.size());
            const auto b = bound_grassmann_dual_b1(n, k, q, d, BigInt(f.size()));
            const BigRat direct = BigRat(total_intersection(g, f));
            ASSERT_GE(b.from_b1, direct);
            ASSERT_EQ(b.from_b1, b.from_tail);
            ASSERT_GE(bound_grassmann_general(n, k, q, BigInt(f.size())).value, direct);
        }
    }
}

TEST(SymmetricB1, Examples)
{
    const SymmetricGround s3(3);
    const auto c = identity_symmetric_b1(s3, coset_family(s3, CosetSpec({{1, 1}})));
    EXPECT_EQ(c.direct, 8);
    EXPECT_EQ(c.b1, 2);
    EXPECT_TRUE(c.holds());
    const auto whole = identity_symmetric_b1(s3, coset_family(s3, CosetSpec()));
    EXPECT_EQ(whole.b1, 0);
    EXPECT_EQ(whole.direct, 36);
    EXPECT_TRUE(whole.holds());
}

TEST(SymmetricB1, RandomFamilies)
{
    gen::Rng rng(62);
    for (int n : {4, 5}) {
        const SymmetricGround g(n);
        for (int trial = 0; trial < 50; ++trial) {
            const auto f = gen::family(rng, g, 1, g.size());
            const auto id = identity_symmetric_b1(g, f);
            ASSERT_TRUE(id.holds());
            ASSERT_GE(bound_symmetric(n, BigInt(f.size())).value, BigRat(id.direct));
        }
    }
}

TEST(LpDual, Examples)
{
    EXPECT_EQ(lp_dual_feasible_value(4, 2, 2, 7).value, 0);
    const auto r = lp_dual_feasible_value(6, 3, 2, 15);
    EXPECT_EQ(r.value, make_rat(336, 5));
    EXPECT_TRUE(r.feasible);
    EXPECT_EQ(bound_from_tail_lower_bound(6, 3, 2, 15, r.value), bound_grassmann_refined(6, 3, 2, 15).value);
    EXPECT_EQ(lp_dual_feasible_value(5, 1, 2, 1).value, 0);
}

TEST(LpDual, ReproducesRefinedBound)
{
    for (int q : {2, 3})
        for (int n = 4; n <= 8; ++n)
            for (int k = 2; 2 * k <= n; ++k) {
                const BigInt top = gaussian_binomial(n - 1, k - 1, q);
                for (BigInt m = 1; m <= top; m += 1 + top / 7) {
                    const auto lp = lp_dual_feasible_value(n, k, q, m);
                    ASSERT_TRUE(lp.feasible);
                    ASSERT_EQ(bound_from_tail_lower_bound(n, k, q, m, lp.value), bound_grassmann_refined(n, k, q, m).value);
                }
            }
}

TEST(LastEigenvalue, ClosedFormMatchesTable)
{
    for (int q : {2, 3})
        for (int n = 2; n <= 8; ++n)
            for (int k = 1; 2 * k <= n; ++k) {
                const auto t = grassmann_tables(n, k, q);
                for (int r = 0; r <= k; ++r) ASSERT_EQ(grassmann_last_eigenvalue(n, k, q, r), t.eigenvalue(k, r));
            }
}
