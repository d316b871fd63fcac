#pragma once

/**
 * @file bounds.hpp
 * @brief Upper bounds on MI for G_q(n,k) and S_n, the b_1 identity for S_n,
 * and the explicit dual feasible point of the Grassmann LP.
 */

#include "errors.hpp"
#include "exactnum.hpp"
#include "oracle.hpp"
#include "schemes.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ekr {

struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    BigRat value = 0;
    bool valid = true;
    std::vector<std::string> flags;
};

namespace detail {

inline BigRat gb(int n, int k, int q) { return BigRat(gaussian_binomial(n, k, q)); }
inline BigRat qp(int q, int e) { return BigRat(ipow(BigInt(q), e)); }

inline std::vector<std::pair<std::string, std::string>> grassmann_params(int n, int k, int q, const BigInt& m)
{
    return {{"scheme", "grassmann"}, {"n", std::to_string(n)}, {"k", std::to_string(k)}, {"q", std::to_string(q)}, {"M", to_string(m)}};
}

/// q [k 1][n-k 1] / ([n 1]([n 1]-1)), the slope shared by the Grassmann bounds.
inline BigRat grassmann_slope(int n, int k, int q)
{
    const BigRat n1 = gb(n, 1, q);
    return BigRat(q) * gb(k, 1, q) * gb(n - k, 1, q) / (n1 * (n1 - 1));
}

} // namespace detail

/**
 * ([n k]/M - [n 1]) q M^2 [k 1][n-k 1] / ([n 1]([n 1]-1)) + k M^2.
 */
inline BoundReport bound_grassmann_general(int n, int k, int q, const BigInt& m)
{
    if (q < 2 || k < 0 || k > n) throw std::domain_error("bound_grassmann_general: need q >= 2 and 0 <= k <= n");
    if (m < 1 || m > gaussian_binomial(n, k, q)) throw std::domain_error("bound_grassmann_general: M out of range");
    BoundReport r;
    r.name = "grassmann_general";
    r.params = detail::grassmann_params(n, k, q, m);
    if (n < 2) {
        r.valid = false;
        r.flags.push_back("requires n >= 2");
        return r;
    }
    const BigRat M = BigRat(m);
    r.value = (detail::gb(n, k, q) / M - detail::gb(n, 1, q)) * M * M * detail::grassmann_slope(n, k, q) + BigRat(k) * M * M;
    return r;
}

/**
 * [[n k]/M - (q^n-1)(q^{n-1}-1)/((q-1)(q^k-1))] M^2 (q^k-1)(q^{k-1}-1)(q^{n-k}-1)
 * / ((q^n-1)(q^{n-1}-1)(q^{n-2}-1)) + k M^2, valid for n >= 2k and
 * M <= [n-1 k-1].
 */
inline BoundReport bound_grassmann_refined(int n, int k, int q, const BigInt& m)
{
    if (q < 2 || k < 0 || k > n) throw std::domain_error("bound_grassmann_refined: need q >= 2 and 0 <= k <= n");
    if (m < 1 || m > gaussian_binomial(n, k, q)) throw std::domain_error("bound_grassmann_refined: M out of range");
    BoundReport r;
    r.name = "grassmann_refined";
    r.params = detail::grassmann_params(n, k, q, m);
    if (k < 1) r.flags.push_back("requires k >= 1");
    if (n < 2 * k) r.flags.push_back("requires n >= 2k");
    if (k >= 1 && m > gaussian_binomial(n - 1, k - 1, q)) r.flags.push_back("requires M <= [n-1 k-1]");
    if (n < 3) r.flags.push_back("requires n >= 3");
    if (!r.flags.empty()) {
        r.valid = false;
        return r;
    }
    const BigRat M = BigRat(m);
    using detail::qp;
    const BigRat lead = detail::gb(n, k, q) / M - (qp(q, n) - 1) * (qp(q, n - 1) - 1) / ((BigRat(q) - 1) * (qp(q, k) - 1));
    const BigRat slope = (qp(q, k) - 1) * (qp(q, k - 1) - 1) * (qp(q, n - k) - 1) /
                         ((qp(q, n) - 1) * (qp(q, n - 1) - 1) * (qp(q, n - 2) - 1));
    r.value = lead * M * M * slope + BigRat(k) * M * M;
    return r;
}

/// M^2/(n-1) (n!/M + n - 2).
inline BoundReport bound_symmetric(int n, const BigInt& m)
{
    if (n < 2) throw std::domain_error("bound_symmetric: need n >= 2");
    if (m < 1 || m > factorial(n)) throw std::domain_error("bound_symmetric: M out of range");
    BoundReport r;
    r.name = "symmetric";
    r.params = {{"scheme", "conjugacy"}, {"n", std::to_string(n)}, {"M", to_string(m)}};
    const BigRat M = BigRat(m);
    r.value = M * M / BigRat(n - 1) * (BigRat(factorial(n)) / M + BigRat(n - 2));
    return r;
}

/// The two dual-distribution bounds on I(F) for a family in G_q(n,k).
struct DualBounds {
    BigRat from_b1;        // (b_1 + 1 - [n 1]) slope M^2 + k M^2
    BigRat from_tail;      // ([n k]/M - sum_{r>=2} b_r - [n 1]) slope M^2 + k M^2
};

inline DualBounds bound_grassmann_dual_b1(int n, int k, int q, const DualDistribution& dual, const BigInt& m)
{
    if (n < 2) throw std::domain_error("bound_grassmann_dual_b1: need n >= 2");
    if (m < 1) throw std::domain_error("bound_grassmann_dual_b1: M must be positive");
    const BigRat M = BigRat(m);
    const BigRat b1 = dual.b.size() > 1 ? dual.b[1] : BigRat(0);
    BigRat tail = 0;
    for (std::size_t r = 2; r < dual.b.size(); ++r) tail += dual.b[r];
    const BigRat slope = detail::grassmann_slope(n, k, q) * M * M;
    const BigRat n1 = detail::gb(n, 1, q);
    DualBounds out;
    out.from_b1 = (b1 + 1 - n1) * slope + BigRat(k) * M * M;
    out.from_tail = (detail::gb(n, k, q) / M - tail - n1) * slope + BigRat(k) * M * M;
    return out;
}

struct SymmetricB1Identity {
    BigInt direct;       // I(F)
    BigRat from_b1;      // M^2 (b_1/(n-1) + 1)
    BigRat from_tail;    // M^2/(n-1) (n!/M + n - 2 - sum_{r>=2} b_r)
    BigRat b1;
    bool holds() const { return BigRat(direct) == from_b1 && BigRat(direct) == from_tail; }
};

/// I(F) against the b_1 expressions, with b from the conjugacy scheme.
inline SymmetricB1Identity identity_symmetric_b1(const SymmetricGround& ground, const Family& f, const Caps& caps = {})
{
    require_family_of(ground, f);
    const int n = ground.n();
    if (n < 2) throw std::domain_error("identity_symmetric_b1: need n >= 2");
    const auto tables = conjugacy_tables(n, caps);
    const auto inner = inner_distribution(tables, ground, f);
    const auto dual = dual_distribution(tables, inner, f.size());
    SymmetricB1Identity out;
    out.direct = total_intersection(ground, f);
    out.b1 = dual.b.at(1);
    const BigRat M = BigRat(BigInt(f.size()));
    const BigRat n1 = BigRat(n - 1);
    BigRat tail = 0;
    for (std::size_t r = 2; r < dual.b.size(); ++r) tail += dual.b[r];
    out.from_b1 = M * M * (out.b1 / n1 + 1);
    out.from_tail = M * M / n1 * (BigRat(factorial(n)) / M + BigRat(n - 2) - tail);
    return out;
}

/// P_k(r) = (-1)^r q^{C(r,2) + k(k-r)} [n-k-r, k-r].
inline BigRat grassmann_last_eigenvalue(int n, int k, int q, int r)
{
    const BigRat mag = BigRat(ipow(BigInt(q), r * (r - 1) / 2 + k * (k - r)) * gaussian_binomial(n - k - r, k - r, q));
    return (r % 2 == 0) ? mag : BigRat(-mag);
}

struct LpDualReport {
    BigRat value;      // objective at x_k = 1/(P_k(2)-P_k(1)), other x_i = 0
    BigRat x_k;
    bool feasible = true;
};

/**
 * Objective value of the dual feasible point x_1 = ... = x_{k-1} = 0,
 * x_k = 1/(P_k(2) - P_k(1)). Checks feasibility, the closed form of P_k(r)
 * against the Eberlein table, and the simplified value
 * ([n k]/M - (q^n-1)/(q^k-1)) q^{k-1}(q^{n-k-1}-1)/(q^{n-2}-1).
 */
inline LpDualReport lp_dual_feasible_value(int n, int k, int q, const BigInt& m)
{
    if (q < 2 || k < 1 || n < 2 * k) throw std::domain_error("lp_dual_feasible_value: need q >= 2, k >= 1, n >= 2k");
    if (m < 1 || m > gaussian_binomial(n - 1, k - 1, q)) throw std::domain_error("lp_dual_feasible_value: need 1 <= M <= [n-1 k-1]");
    LpDualReport out;
    if (k == 1) {
        out.value = 0;
        out.x_k = 0;
        return out;
    }
    const auto tables = grassmann_tables(n, k, q);
    std::vector<BigRat> pk;
    for (int r = 0; r <= k; ++r) {
        pk.push_back(grassmann_last_eigenvalue(n, k, q, r));
        if (pk.back() != tables.eigenvalue(k, r))
            throw consistency_error("closed form of P_k(" + std::to_string(r) + ") disagrees with the Eberlein table");
    }
    const BigRat denom = pk[2] - pk[1];
    if (denom <= 0) throw consistency_error("P_k(2) - P_k(1) is not positive");
    for (int r = 2; r <= k; ++r)
        if ((pk[1] - pk[static_cast<std::size_t>(r)]) / denom < -1) out.feasible = false;
    if (!out.feasible) throw consistency_error("dual LP point is infeasible");
    const BigRat ratio = BigRat(gaussian_binomial(n, k, q)) / BigRat(m);
    out.x_k = 1 / denom;
    out.value = (pk[1] - ratio * pk[1] - pk[0]) * out.x_k;
    using detail::qp;
    const BigRat simplified = (ratio - (qp(q, n) - 1) / (qp(q, k) - 1)) * qp(q, k - 1) * (qp(q, n - k - 1) - 1) / (qp(q, n - 2) - 1);
    if (simplified != out.value) throw consistency_error("dual LP value disagrees with its simplified form");
    return out;
}

/// ([n k]/M - lambda - [n 1]) slope M^2 + k M^2 for a lower bound lambda on sum_{r>=2} b_r.
inline BigRat bound_from_tail_lower_bound(int n, int k, int q, const BigInt& m, const BigRat& lambda)
{
    const BigRat M = BigRat(m);
    return (detail::gb(n, k, q) / M - lambda - detail::gb(n, 1, q)) * detail::grassmann_slope(n, k, q) * M * M +
           BigRat(k) * M * M;
}

} // namespace ekr
