#include <ekr/exactnum.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

using namespace ekr;

TEST(Factorial, Values)
{
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(5), 120);
    EXPECT_EQ(factorial(10), 3628800);
    EXPECT_EQ(to_string(factorial(25)), "15511210043330985984000000");
}

TEST(Binomial, Values)
{
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(35, 7), 6724520);
    EXPECT_EQ(binomial(7, -1), 0);
    EXPECT_EQ(binomial(7, 8), 0);
    for (int n = 0; n < 10; ++n) EXPECT_EQ(binomial(n, 0), 1);
}

TEST(Binomial, MatchesPascalTriangle)
{
    std::vector<std::vector<BigInt>> row{{1}};
    for (int n = 1; n <= 60; ++n) {
        std::vector<BigInt> next(static_cast<std::size_t>(n + 1), 1);
        for (int k = 1; k < n; ++k) next[k] = row.back()[k - 1] + row.back()[k];
        row.push_back(next);
    }
    for (int n = 0; n <= 60; ++n)
        for (int k = 0; k <= n; ++k) ASSERT_EQ(binomial(n, k), row[n][k]) << n << " " << k;
}

TEST(GaussianBinomial, Values)
{
    EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
    EXPECT_EQ(gaussian_binomial(3, 1, 2), 7);
    EXPECT_EQ(gaussian_binomial(5, 2, 2), 155);
    EXPECT_EQ(gaussian_binomial(5, 2, 3), 1210);
    for (int n = 0; n < 8; ++n) EXPECT_EQ(gaussian_binomial(n, 0, 3), 1);
    EXPECT_EQ(gaussian_binomial(3, 4, 2), 0);
    EXPECT_EQ(gaussian_binomial(3, -1, 2), 0);
}

TEST(GaussianBinomial, QPascalAndSymmetry)
{
    for (int q : {2, 3, 4, 5, 7}) {
        std::vector<std::vector<BigInt>> row{{1}};
        for (int n = 1; n <= 20; ++n) {
            std::vector<BigInt> next(static_cast<std::size_t>(n + 1), 1);
            for (int k = 1; k < n; ++k) next[k] = row.back()[k - 1] + ipow(BigInt(q), k) * row.back()[k];
            row.push_back(next);
        }
        for (int n = 0; n <= 20; ++n)
            for (int k = 0; k <= n; ++k) {
                ASSERT_EQ(gaussian_binomial(n, k, q), row[n][k]) << n << " " << k << " " << q;
                ASSERT_EQ(gaussian_binomial(n, k, q), gaussian_binomial(n, n - k, q));
            }
    }
}

TEST(GaussianBinomial, RejectsBadQ) { EXPECT_THROW(gaussian_binomial(3, 1, 1), std::domain_error); }

TEST(Derangement, Values)
{
    EXPECT_EQ(derangement(0), 1);
    EXPECT_EQ(derangement(1), 0);
    EXPECT_EQ(derangement(4), 9);
    EXPECT_EQ(derangement(5), 44);
}

TEST(Derangement, MatchesBruteForce)
{
    for (int n = 0; n <= 9; ++n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        long long count = 0;
        do {
            bool fpf = true;
            for (int i = 0; i < n; ++i) fpf = fpf && p[i] != i;
            count += fpf;
        } while (std::next_permutation(p.begin(), p.end()));
        EXPECT_EQ(derangement(n), count) << n;
    }
}

TEST(Derangement, Recurrence)
{
    for (int n = 2; n <= 40; ++n) EXPECT_EQ(derangement(n), (n - 1) * (derangement(n - 1) + derangement(n - 2)));
}

TEST(Rational, IntegerHelpers)
{
    EXPECT_TRUE(is_integer(make_rat(6, 3)));
    EXPECT_FALSE(is_integer(make_rat(7, 3)));
    EXPECT_EQ(to_integer(make_rat(-12, 4)), -3);
    EXPECT_THROW(to_integer(make_rat(1, 2)), std::domain_error);
    EXPECT_EQ(abs(make_rat(-3, 7)), make_rat(3, 7));
}

TEST(Rational, TextRoundTrip)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    for (int i = 0; i < 500; ++i) {
        long long den = d(rng);
        if (den == 0) den = 1;
        const BigRat r = make_rat(d(rng), den);
        ASSERT_EQ(parse_bigrat(to_string(r)), r);
    }
    EXPECT_EQ(to_string(make_rat(6, -4)), "-3/2");
    EXPECT_EQ(to_string(make_rat(8, 4)), "2");
    EXPECT_EQ(parse_bigint("-123456789012345678901234567890"), BigInt("-123456789012345678901234567890"));
    EXPECT_THROW(parse_bigint("12x"), std::invalid_argument);
    EXPECT_THROW(parse_bigrat("1/0"), std::invalid_argument);
}
