#include "generators.hpp"

#include <ekr/oracle.hpp>
#include <ekr/schemes.hpp>

#include <gtest/gtest.h>

#include <map>

using namespace ekr;

namespace {

using Matrix = std::vector<std::vector<long long>>;

Matrix multiply(const Matrix& a, const Matrix& b)
{
    const std::size_t n = a.size();
    Matrix c(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

long long trace(const Matrix& a)
{
    long long t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

/// Adjacency matrices of every relation, built from the ground set directly.
template <class RelationOf>
std::vector<Matrix> adjacency(std::size_t v, int classes, RelationOf rel)
{
    std::vector<Matrix> a(static_cast<std::size_t>(classes + 1), Matrix(v, std::vector<long long>(v, 0)));
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = 0; y < v; ++y) a[rel(x, y)][x][y] = 1;
    return a;
}

/// Sum_j u_j P_i(j)^m = tr(A_i^m) and sum_j u_j P_i(j) P_l(j) = tr(A_i A_l).
void expect_traces(const SchemeTables& t, const std::vector<Matrix>& a)
{
    for (int i = 0; i <= t.classes; ++i) {
        const Matrix a2 = multiply(a[i], a[i]);
        const Matrix a3 = multiply(a2, a[i]);
        BigRat s1 = 0, s2 = 0, s3 = 0;
        for (int j = 0; j <= t.classes; ++j) {
            const BigRat p = t.eigenvalue(i, j), u = t.multiplicities[j];
            s1 += u * p;
            s2 += u * p * p;
            s3 += u * p * p * p;
        }
        EXPECT_EQ(s1, BigRat(trace(a[i])));
        EXPECT_EQ(s2, BigRat(trace(a2)));
        EXPECT_EQ(s3, BigRat(trace(a3)));
        for (int l = 0; l <= t.classes; ++l) {
            BigRat mixed = 0;
            for (int j = 0; j <= t.classes; ++j) mixed += t.multiplicities[j] * t.eigenvalue(i, j) * t.eigenvalue(l, j);
            EXPECT_EQ(mixed, BigRat(trace(multiply(a[i], a[l]))));
        }
    }
}

std::size_t conjugacy_relation(const SchemeTables& t, const Permutation& x, const Permutation& y)
{
    const auto mu = cycle_type(x.compose(y.inverse()));
    for (std::size_t i = 0; i < t.class_types.size(); ++i)
        if (t.class_types[i] == mu) return i;
    throw std::logic_error("class not found");
}

} // namespace

TEST(GrassmannTables, Axioms)
{
    for (int q : {2, 3})
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; k <= n; ++k) {
                const auto t = grassmann_tables(n, k, q);
                ASSERT_TRUE(pq_is_scalar(t)) << n << k << q;
                ASSERT_TRUE(pq_ratio_relation_holds(t));
                ASSERT_TRUE(scheme_basics_hold(t));
                ASSERT_EQ(t.v, gaussian_binomial(n, k, q));
                for (int i = 0; i <= t.classes; ++i) ASSERT_EQ(t.eigenvalue(i, 0), BigRat(count_at_intersection(n, k, k, k - i, q)));
            }
    EXPECT_TRUE(pq_is_scalar(grassmann_tables(8, 4, 5)));
}

TEST(GrassmannTables, SmallValues)
{
    const auto t = grassmann_tables(4, 2, 2);
    EXPECT_EQ(t.classes, 2);
    EXPECT_EQ(t.valencies[1], 18);
    EXPECT_EQ(t.eigenvalue(2, 1), -4);
    EXPECT_EQ(t.eigenvalue(1, 1), 3);
}

TEST(GrassmannTables, TracesMatchAdjacencyMatrices)
{
    for (auto [n, k, q] : std::vector<std::array<int, 3>>{{4, 2, 2}, {5, 2, 2}, {5, 3, 2}, {4, 1, 3}, {4, 2, 3}}) {
        const auto g = enumerate_subspaces(n, k, q);
        const auto t = grassmann_tables(n, k, q);
        expect_traces(t, adjacency(g.size(), t.classes, [&](std::size_t x, std::size_t y) {
                          return static_cast<std::size_t>(k - g.intersection(x, y));
                      }));
    }
}

TEST(ConjugacyTables, Axioms)
{
    for (int n = 1; n <= 7; ++n) {
        const auto t = conjugacy_tables(n);
        ASSERT_TRUE(pq_is_scalar(t)) << n;
        ASSERT_TRUE(pq_ratio_relation_holds(t));
        ASSERT_TRUE(scheme_basics_hold(t));
        ASSERT_EQ(t.class_types.front(), Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
        ASSERT_EQ(t.irreps.front(), Partition({n}));
        for (int i = 0; i <= t.classes; ++i) ASSERT_EQ(t.valencies[i], BigRat(class_size(t.class_types[i])));
        for (int j = 0; j <= t.classes; ++j) ASSERT_EQ(t.multiplicities[j], BigRat(dim_irrep(t.irreps[j]) * dim_irrep(t.irreps[j])));
    }
}

TEST(ConjugacyTables, TracesMatchAdjacencyMatrices)
{
    for (int n : {3, 4, 5}) {
        const SymmetricGround g(n);
        const auto t = conjugacy_tables(n);
        expect_traces(t, adjacency(g.size(), t.classes,
                                   [&](std::size_t x, std::size_t y) { return conjugacy_relation(t, g[x], g[y]); }));
    }
}

TEST(InnerDistribution, Examples)
{
    const auto g = enumerate_subspaces(4, 2, 2);
    const auto t = grassmann_tables(4, 2, 2);
    const auto single = inner_distribution(t, g, Family(g.descriptor(), {3}));
    EXPECT_EQ(single.a, (std::vector<BigRat>{1, 0, 0}));
    const auto star = full_t_star(g, Subspace(4, 2, {{0, 0, 0, 1}}));
    EXPECT_EQ(inner_distribution(t, g, star).a, (std::vector<BigRat>{1, 6, 0}));

    const SymmetricGround s3(3);
    const auto c = conjugacy_tables(3);
    const auto coset = coset_family(s3, CosetSpec({{1, 1}}));
    const auto a = inner_distribution(c, s3, coset);
    EXPECT_EQ(a.a, (std::vector<BigRat>{1, 1, 0}));
    const auto b = dual_distribution(c, a, coset.size());
    EXPECT_EQ(b.b, (std::vector<BigRat>{1, 2, 0}));
    EXPECT_EQ(c.eigenspace_labels[1], "2,1");
    EXPECT_THROW(inner_distribution(c, s3, Family(s3.descriptor(), {})), std::invalid_argument);
}

TEST(DualDistribution, WholeGround)
{
    const auto g = enumerate_subspaces(4, 2, 3);
    const auto t = grassmann_tables(4, 2, 3);
    std::vector<std::size_t> all(g.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    const Family f(g.descriptor(), all);
    const auto b = dual_distribution(t, inner_distribution(t, g, f), f.size()).b;
    EXPECT_EQ(b, (std::vector<BigRat>{1, 0, 0}));
}

TEST(DualDistribution, DetectsInconsistentInput)
{
    auto t = conjugacy_tables(3);
    const SymmetricGround s3(3);
    const auto f = coset_family(s3, CosetSpec({{1, 1}}));
    const auto a = inner_distribution(t, s3, f);
    EXPECT_NO_THROW(dual_distribution(t, a, f.size()));
    t.Q[1][1] += 1;
    EXPECT_THROW(dual_distribution(t, a, f.size()), consistency_error);
}

TEST(Distributions, IdentitiesOnRandomFamilies)
{
    gen::Rng rng(41);
    const auto g = enumerate_subspaces(5, 2, 2);
    const auto tg = grassmann_tables(5, 2, 2);
    const SymmetricGround s(5);
    const auto ts = conjugacy_tables(5);
    auto check = [&](const SchemeTables& t, const auto& ground, const Family& f) {
        const auto a = inner_distribution(t, ground, f);
        // independent count of ordered pairs per relation
        std::map<std::size_t, long long> pairs;
        for (auto x : f.members())
            for (auto y : f.members()) {
                if constexpr (std::is_same_v<std::decay_t<decltype(ground)>, GrassmannGround>)
                    ++pairs[static_cast<std::size_t>(t.ground.k - ground.intersection(x, y))];
                else
                    ++pairs[conjugacy_relation(t, ground[x], ground[y])];
            }
        for (int i = 0; i <= t.classes; ++i) ASSERT_EQ(a.a[i] * BigRat(BigInt(f.size())), BigRat(pairs[static_cast<std::size_t>(i)]));
        const auto b = dual_distribution(t, a, f.size()).b;
        ASSERT_EQ(b[0], 1);
        BigRat sum = 0;
        for (const auto& x : b) {
            ASSERT_GE(x, 0);
            sum += x;
        }
        ASSERT_EQ(sum, make_rat(t.v, BigInt(f.size())));
        ASSERT_EQ(total_intersection_from_inner(t, a, f.size()), BigRat(total_intersection(ground, f)));
    };
    for (int trial = 0; trial < 100; ++trial) {
        check(tg, g, gen::family(rng, g, 1, 40));
        check(ts, s, gen::family(rng, s, 1, 40));
    }
}
