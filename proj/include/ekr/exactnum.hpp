#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact integer/rational scalars and the counting functions built on them.
 *
 * Every quantity in the library (eigenvalues, distributions, bounds) is held
 * as a BigInt or BigRat; nothing is rounded.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ekr {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n)
{
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    // r = C(n - k + i, i) after step i
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt ipow(const BigInt& base, int e)
{
    if (e < 0) throw std::domain_error("ipow: negative exponent");
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

/// q-analogue of the binomial coefficient: number of k-dim subspaces of F_q^n.
inline BigInt gaussian_binomial(int n, int k, int q)
{
    if (q < 2) throw std::domain_error("gaussian_binomial: q must be >= 2");
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    const BigInt bq = q;
    BigInt r = 1;
    // After step j, r = [n j]_q, which is an integer, so each division is exact.
    for (int j = 1; j <= k; ++j) {
        r *= ipow(bq, n - j + 1) - 1;
        r /= ipow(bq, j) - 1;
    }
    return r;
}

/// Number of fixed-point-free permutations of n points.
inline BigInt derangement(int n)
{
    if (n < 0) throw std::domain_error("derangement: negative argument");
    // d_n = n! sum_{i} (-1)^i / i!, accumulated as n!/i! from i = n down to 0.
    BigInt sum = 0;
    BigInt term = 1; // n!/i! for i = n
    for (int i = n; i >= 0; --i) {
        sum += (i % 2 == 0) ? term : BigInt(-term);
        if (i > 0) term *= i;
    }
    return sum;
}

inline BigRat make_rat(const BigInt& num, const BigInt& den = 1)
{
    if (den == 0) throw std::domain_error("BigRat: zero denominator");
    if (den < 0) return BigRat(BigInt(-num), BigInt(-den)); // Boost 1.74 rejects a negative denominator
    return BigRat(num, den);
}

inline bool is_integer(const BigRat& r)
{
    return boost::multiprecision::denominator(r) == 1;
}

inline BigInt to_integer(const BigRat& r)
{
    if (!is_integer(r)) throw std::domain_error("BigRat is not an integer: " + r.str());
    return boost::multiprecision::numerator(r);
}

inline BigRat abs(const BigRat& r) { return r < 0 ? BigRat(-r) : r; }

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Canonical text form: "p" for integers, "p/q" otherwise (lowest terms, q > 0).
inline std::string to_string(const BigRat& r)
{
    const BigInt& num = boost::multiprecision::numerator(r);
    const BigInt& den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline BigInt parse_bigint(std::string_view s)
{
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("parse_bigint: empty digits");
    BigInt v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("parse_bigint: bad character in '" + std::string(s) + "'");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? BigInt(-v) : v;
}

inline BigRat parse_bigrat(std::string_view s)
{
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return BigRat(parse_bigint(s));
    const BigInt den = parse_bigint(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_bigrat: zero denominator");
    return make_rat(parse_bigint(s.substr(0, slash)), den);
}

/// Narrowing with a range check; used where hot loops run on machine words.
inline std::int64_t to_int64(const BigInt& v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("value does not fit in 64 bits: " + v.str());
    return v.convert_to<std::int64_t>();
}

} // namespace ekr
