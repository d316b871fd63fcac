#include "generators.hpp"

#include <ekr/oracle.hpp>
#include <ekr/spectra.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace ekr;

namespace {

Partition L(std::vector<int> v) { return Partition(v); }

int sign_of(const Permutation& p) { return (p.n() - cycle_type(p).length()) % 2 ? -1 : 1; }

/// tr(A^m) for the Cayley graph on S_n with the given generator set, m = 1..3.
std::array<BigInt, 3> cayley_traces(int n, const GeneratorSpec& gen)
{
    const SymmetricGround g(n);
    std::vector<Permutation> gens;
    for (const auto& p : g.permutations())
        if (gen.contains(cycle_type(p))) gens.push_back(p);
    // closed walks from the identity, times n!
    std::vector<long long> walk(g.size(), 0), next(g.size());
    walk[0] = 1;
    std::array<BigInt, 3> tr{};
    for (int m = 0; m < 3; ++m) {
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t x = 0; x < g.size(); ++x)
            if (walk[x])
                for (const auto& s : gens) next[g.index_of(s.compose(g[x]))] += walk[x];
        walk.swap(next);
        tr[m] = BigInt(walk[0]) * BigInt(g.size());
    }
    return tr;
}

} // namespace

TEST(Eigenvalue, Examples)
{
    EXPECT_EQ(eigenvalue(5, L({5}), GeneratorSpec::fewer(1)), 44);
    EXPECT_EQ(eigenvalue(5, L({4, 1}), GeneratorSpec::fewer(1)), -11);
    EXPECT_EQ(eigenvalue(5, L({1, 1, 1, 1, 1}), GeneratorSpec::exactly(1)), -15);
    EXPECT_EQ(eigenvalue(5, L({1, 1, 1, 1, 1}), GeneratorSpec::exactly(0)), 4);
    for (int n = 5; n <= 9; ++n) {
        EXPECT_EQ(eigenvalue(n, L({n}), GeneratorSpec::fewer(1)), BigRat(derangement(n)));
        EXPECT_EQ(eigenvalue(n, L({n - 1, 1}), GeneratorSpec::fewer(1)), make_rat(-derangement(n), n - 1));
    }
}

TEST(Eigenvalue, SignedCountForSignRepresentation)
{
    for (int n = 2; n <= 7; ++n) {
        const SymmetricGround g(n);
        for (int k = 0; k < n; ++k) {
            long long signed_count = 0;
            for (const auto& p : g.permutations())
                if (fixed_points(p) == k) signed_count += sign_of(p);
            ASSERT_EQ(eigenvalue(n, L(std::vector<int>(static_cast<std::size_t>(n), 1)), GeneratorSpec::exactly(k)), BigRat(signed_count));
            ASSERT_EQ(sign_eigenvalue_closed(n, k), BigRat(signed_count));
        }
    }
}

TEST(Eigenvalue, SpectrumMatchesCayleyGraphTraces)
{
    for (int n : {4, 5})
        for (const auto& gen : {GeneratorSpec::fewer(1), GeneratorSpec::fewer(2), GeneratorSpec::exactly(1), GeneratorSpec::exactly(2)}) {
            const auto tr = cayley_traces(n, gen);
            std::array<BigRat, 3> sums{};
            for (const auto& [rho, lam] : spectrum(n, gen)) {
                const BigRat d2 = BigRat(dim_irrep(rho) * dim_irrep(rho));
                sums[0] += d2 * lam;
                sums[1] += d2 * lam * lam;
                sums[2] += d2 * lam * lam * lam;
            }
            for (int m = 0; m < 3; ++m) EXPECT_EQ(sums[m], BigRat(tr[m])) << n << " " << gen.str() << " m=" << m + 1;
            EXPECT_EQ(eigenvalue(n, L({n}), gen), BigRat(generator_size(n, gen)));
        }
}

TEST(Eigenvalue, GeneratorParsing)
{
    EXPECT_EQ(parse_generator("fewer:2").str(), "fewer:2");
    EXPECT_EQ(parse_generator("exactly:0").str(), "exactly:0");
    EXPECT_THROW(parse_generator("fewer:0"), std::invalid_argument);
    EXPECT_THROW(parse_generator("some:1"), std::invalid_argument);
}

TEST(ClosedForms, TopEigenvalues)
{
    EXPECT_EQ(eigenvalue_closed_top(5, 1), std::make_pair(BigRat(44), BigRat(-11)));
    EXPECT_EQ(eigenvalue_closed_top(5, 2), std::make_pair(BigRat(89), BigRat(-11)));
    EXPECT_EQ(eigenvalue_closed_top(5, 5), std::make_pair(BigRat(119), BigRat(-1)));
    for (int n = 5; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto [a, b] = eigenvalue_closed_top(n, k);
            ASSERT_EQ(a, eigenvalue(n, L({n}), GeneratorSpec::fewer(k)));
            ASSERT_EQ(b, eigenvalue(n, L({n - 1, 1}), GeneratorSpec::fewer(k)));
        }
}

TEST(Identities, NestedDerangementSum)
{
    EXPECT_EQ(nested_derangement_sum(5), 3);
    EXPECT_EQ(nested_derangement_sum(6), 4);
    EXPECT_EQ(nested_derangement_sum(20), 18);
    for (int n = 5; n <= 30; ++n) EXPECT_EQ(nested_derangement_sum(n), n - 2);
}

TEST(Identities, TopEigenvalueSums)
{
    EXPECT_EQ(top_eigenvalue_sums(5), std::make_pair(BigRat(360), BigRat(510)));
    EXPECT_EQ(top_eigenvalue_sums(6), std::make_pair(BigRat(2880), BigRat(3744)));
    EXPECT_EQ(top_eigenvalue_sums(7), std::make_pair(BigRat(25200), BigRat(31080)));
    for (int n = 5; n <= 10; ++n) EXPECT_EQ(top_eigenvalue_sums(n), top_eigenvalue_sums_expected(n));
    for (int n = 5; n <= 7; ++n) {
        BigRat first = 0, second = 0;
        for (int k = 1; k <= n; ++k) {
            const auto a = eigenvalue(n, L({n}), GeneratorSpec::fewer(k));
            const auto b = eigenvalue(n, L({n - 1, 1}), GeneratorSpec::fewer(k));
            first += a + BigRat(n - 1) * b;
            second += a - b;
        }
        EXPECT_EQ(std::make_pair(first, second), top_eigenvalue_sums(n));
    }
}

TEST(Branching, AllPartitionsOfFiveAndSix)
{
    for (int n : {5, 6})
        for (const auto& rho : partitions_of(n))
            for (int k = 1; k < n; ++k) EXPECT_TRUE(branching_rule_holds(n, rho, k)) << rho.str() << " k=" << k;
    EXPECT_EQ(remove_corner(L({3, 2, 2})), (std::vector<Partition>{L({2, 2, 2}), L({3, 2, 1})}));
}

TEST(DimensionBound, HoldsForEveryIrrep)
{
    for (int n = 3; n <= 7; ++n)
        for (int k = 1; k <= 3; ++k)
            for (const auto& row : dimension_eigenvalue_bound(n, GeneratorSpec::fewer(k))) EXPECT_TRUE(row.holds) << n << " " << row.rho.str();
}

namespace {

/// |proj_{span of 1-coset indicators} f|^2 in floating point, by Gram-Schmidt.
double projected_norm(const SymmetricGround& g, const Family& f)
{
    const int n = g.n();
    const std::size_t v = g.size();
    std::vector<std::vector<double>> basis;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<double> x(v, 0);
            for (std::size_t s = 0; s < v; ++s) x[s] = g[s](i) == j ? 1.0 : 0.0;
            for (const auto& b : basis) {
                double dot = 0;
                for (std::size_t s = 0; s < v; ++s) dot += x[s] * b[s];
                for (std::size_t s = 0; s < v; ++s) x[s] -= dot * b[s];
            }
            double norm = 0;
            for (double e : x) norm += e * e;
            if (norm < 1e-9) continue;
            for (double& e : x) e /= std::sqrt(norm);
            basis.push_back(x);
        }
    double total = 0;
    for (const auto& b : basis) {
        double dot = 0;
        for (auto s : f.members()) dot += b[s];
        total += dot * dot;
    }
    return total / static_cast<double>(v); // normalised inner product <f,g> = (1/n!) sum f g
}

} // namespace

TEST(Projection, CosetsAndWholeGroup)
{
    for (int n : {4, 5}) {
        const SymmetricGround g(n);
        const auto coset = coset_family(g, CosetSpec({{2, 3}}));
        const auto r = projection_report(g, coset);
        EXPECT_EQ(r.norm_f2, 0);
        EXPECT_EQ(r.norm_f, make_rat(1, n));
        std::vector<std::size_t> all(g.size());
        std::iota(all.begin(), all.end(), std::size_t{0});
        const auto w = projection_report(g, Family(g.descriptor(), all));
        EXPECT_EQ(w.norm_f, 1);
        EXPECT_EQ(w.norm_f0, 1);
        EXPECT_EQ(w.norm_f1, 0);
        EXPECT_EQ(w.norm_f2, 0);
    }
}

TEST(Projection, RandomFamiliesAgainstFloatingPointProjection)
{
    gen::Rng rng(51);
    const SymmetricGround g(4);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = gen::family(rng, g.descriptor(), g.size(), 6);
        const auto r = projection_report(g, f);
        EXPECT_EQ(r.norm_f, make_rat(1, 4));
        EXPECT_EQ(r.norm_f0 + r.norm_f1 + r.norm_f2, r.norm_f);
        EXPECT_GE(r.norm_f1, 0);
        EXPECT_GE(r.norm_f2, 0);
        EXPECT_EQ(r.norm_f0, make_rat(1, 16));
        EXPECT_NEAR(static_cast<double>(r.norm_f0 + r.norm_f1), projected_norm(g, f), 1e-9);
    }
}

TEST(Projection, InvariantUnderRelabelling)
{
    gen::Rng rng(52);
    const SymmetricGround g(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = gen::family(rng, g, 2, 40);
        const auto tau = gen::permutation(rng, 5);
        std::vector<std::size_t> moved;
        for (auto s : f.members()) moved.push_back(g.index_of(tau.compose(g[s]).compose(tau.inverse())));
        const Family h(g.descriptor(), moved);
        EXPECT_EQ(projection_report(g, f).norm_f1, projection_report(g, h).norm_f1);
    }
}

TEST(SpectralIdentity, RandomFamiliesAndSingletons)
{
    gen::Rng rng(53);
    for (int n : {3, 4, 5}) {
        const SymmetricGround g(n);
        for (int trial = 0; trial < 20; ++trial) {
            const auto f = gen::family(rng, g, 1, 30);
            const auto id = spectral_identity_check(g, f);
            ASSERT_TRUE(id.holds());
            ASSERT_EQ(id.direct, total_intersection(g, f));
        }
        const auto single = spectral_identity_check(g, Family(g.descriptor(), {0}));
        EXPECT_TRUE(single.holds());
        EXPECT_EQ(single.direct, n);
    }
}

TEST(SpectralIdentity, CapRefusal)
{
    Caps c;
    c.projection_n = 4;
    const SymmetricGround g(5);
    EXPECT_THROW(projection_report(g, Family(g.descriptor(), {0}), c), size_limit_error);
}
