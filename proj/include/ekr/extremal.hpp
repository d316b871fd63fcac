#pragma once

/**
 * @file extremal.hpp
 * @brief Closed-form total intersection numbers of the extremal constructions:
 * full t-stars in G_q(n,k) and the coset families T_0(n,s) in S_n.
 */

#include "errors.hpp"
#include "exactnum.hpp"

#include <string>
#include <vector>

namespace ekr {

/// I of the family of all k-dim subspaces through a fixed t-dim subspace.
inline BigInt star_value(int n, int k, int t, int q)
{
    if (t < 1 || t > k || k > n) throw std::domain_error("star_value: need 1 <= t <= k <= n");
    BigInt inner = 0;
    for (int j = 0; j <= k - t; ++j)
        inner += BigInt(j + t) * ipow(BigInt(q), (k - t - j) * (k - t - j)) * gaussian_binomial(n - k, k - t - j, q) *
                 gaussian_binomial(k - t, j, q);
    return inner * gaussian_binomial(n - t, k - t, q);
}

namespace detail {

inline BigInt sq(const BigInt& x) { return x * x; }

/// Case 0 <= a0 <= a1 <= n-1.
inline BigInt t0_value_low(int n, const BigInt& a0, const BigInt& a1)
{
    const BigInt f1 = factorial(n - 1), f2 = factorial(n - 2), f3 = factorial(n - 3);
    BigInt v = sq(a1 * f2) + a0 * sq(f1);
    v += sq(f2) * (a0 * a0 * n + 2 * a0 * a1 - 2 * a0 * a0 + a1 - a0);
    BigInt tail = sq(a0 * f2) + a0 * sq((a0 - 1) * f2 + (a1 - 1) * f3) + (a1 - a0) * sq(a0 * f2 + (a1 - 1) * f3) +
                  (n - a1 - 1) * sq(a0 * f2 + a1 * f3);
    return v + (n - 2) * tail;
}

/// Case 0 <= a1 <= a0 <= n-1.
inline BigInt t0_value_high(int n, const BigInt& a0, const BigInt& a1)
{
    const BigInt f1 = factorial(n - 1), f2 = factorial(n - 2), f3 = factorial(n - 3);
    BigInt v = sq(a1 * f2) + a0 * sq(f1);
    v += sq(f2) * (a0 * a0 * n + 2 * a0 * a1 - 2 * a0 * a0 + a0 - a1);
    BigInt tail = sq(a0 * f2) + a1 * sq((a0 - 1) * f2 + (a1 - 1) * f3) + (a0 - a1) * sq((a0 - 1) * f2 + a1 * f3) +
                  (n - a0 - 1) * sq(a0 * f2 + a1 * f3);
    return v + (n - 2) * tail;
}

/// a1 = 0: a0 disjoint 1-cosets only.
inline BigInt t0_value_cosets_only(int n, const BigInt& a0)
{
    const BigInt f1 = factorial(n - 1), f2 = factorial(n - 2);
    return a0 * sq(f1) + (n - 1) * (a0 * sq((a0 - 1) * f2) + (n - a0) * sq(a0 * f2));
}

} // namespace detail

/**
 * Exact I(T_0(n,s)) for block counts (a0, a1). When a0 = a1 both case
 * formulas are evaluated and must agree; when a1 = 0 the cosets-only formula
 * is used and checked against the a1 <= a0 case.
 */
inline BigInt t0_value(int n, int a0, int a1)
{
    if (n < 3) throw std::domain_error("t0_value: need n >= 3");
    if (a0 < 0 || a1 < 0 || a0 > n - 1 || a1 > n - 1) throw std::domain_error("t0_value: need 0 <= a0, a1 <= n - 1");
    const BigInt A0 = a0, A1 = a1;
    if (a1 == 0) {
        const BigInt v = detail::t0_value_cosets_only(n, A0);
        if (a0 > 0 && v != detail::t0_value_high(n, A0, A1))
            throw consistency_error("t0_value: cosets-only formula disagrees with the a1 <= a0 case");
        return v;
    }
    if (a0 < a1) return detail::t0_value_low(n, A0, A1);
    if (a1 < a0) return detail::t0_value_high(n, A0, A1);
    const BigInt lo = detail::t0_value_low(n, A0, A1), hi = detail::t0_value_high(n, A0, A1);
    if (lo != hi) throw consistency_error("t0_value: the two case formulas disagree at a0 = a1");
    return lo;
}

enum class Construction {
    t_star,           // all k-spaces through a t-space
    t0_cosets,        // T_0(n,s)
    plane_star,       // all 2-spaces through a point, MI at M = [n-1 1]
    solid_star,       // all 3-spaces through a line, MI at M = [n-2 1]
    point_stabilizer  // {sigma : sigma(1) = 1}, MI at M = (n-1)!
};

inline std::string construction_name(Construction c)
{
    switch (c) {
    case Construction::t_star: return "t_star";
    case Construction::t0_cosets: return "t0_cosets";
    case Construction::plane_star: return "plane_star";
    case Construction::solid_star: return "solid_star";
    case Construction::point_stabilizer: return "point_stabilizer";
    }
    return "?";
}

struct ConstructionValue {
    Construction id;
    std::vector<std::pair<std::string, int>> params;
    BigInt value;
};

/**
 * Closed-form MI values certified by a matching construction:
 * plane_star (q, n >= 2): (q^{n-1}+q-2)(q^{n-1}-1)/(q-1)^2;
 * solid_star (q, n >= 6): (2q^{n-2}+q-3)(q^{n-2}-1)/(q-1)^2;
 * point_stabilizer (n >= 2): 2((n-1)!)^2.
 */
inline ConstructionValue mi_closed_form(Construction which, int n, int q = 0)
{
    ConstructionValue out{which, {{"n", n}}, 0};
    auto qpow = [&](int e) { return ipow(BigInt(q), e); };
    switch (which) {
    case Construction::plane_star: {
        if (n < 2 || q < 2) throw std::domain_error("plane_star: need n >= 2 and q >= 2");
        out.params.emplace_back("q", q);
        out.value = (qpow(n - 1) + q - 2) * (qpow(n - 1) - 1) / ((q - 1) * (q - 1));
        return out;
    }
    case Construction::solid_star: {
        if (n < 6 || q < 2) throw std::domain_error("solid_star: need n >= 6 and q >= 2");
        out.params.emplace_back("q", q);
        out.value = (2 * qpow(n - 2) + q - 3) * (qpow(n - 2) - 1) / ((q - 1) * (q - 1));
        return out;
    }
    case Construction::point_stabilizer: {
        if (n < 2) throw std::domain_error("point_stabilizer: need n >= 2");
        out.value = 2 * factorial(n - 1) * factorial(n - 1);
        return out;
    }
    default: throw std::invalid_argument("mi_closed_form: no closed-form MI for this construction");
    }
}

} // namespace ekr
