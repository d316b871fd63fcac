#pragma once

/**
 * @file spectra.hpp
 * @brief Eigenvalues of the Cayley graphs on S_n generated by fixed-point
 * classes, their closed forms, and the projection of a family's indicator
 * onto the span of the 1-coset indicators.
 *
 * Inner products on functions S_n -> Q are normalised: <f,g> = E[f g].
 */

#include "errors.hpp"
#include "exactnum.hpp"
#include "family.hpp"
#include "permgroup.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ekr {

enum class GeneratorMode { fewer_than_k, exactly_k };

/// Generator set {sigma : fix(sigma) < k} or {sigma : fix(sigma) = k}.
struct GeneratorSpec {
    GeneratorMode mode = GeneratorMode::fewer_than_k;
    int k = 1;

    static GeneratorSpec fewer(int k)
    {
        if (k < 1) throw std::invalid_argument("fewer-than generator needs k >= 1");
        return {GeneratorMode::fewer_than_k, k};
    }
    static GeneratorSpec exactly(int k)
    {
        if (k < 0) throw std::invalid_argument("exactly generator needs k >= 0");
        return {GeneratorMode::exactly_k, k};
    }

    bool contains(const Partition& mu) const
    {
        return mode == GeneratorMode::fewer_than_k ? mu.ones() < k : mu.ones() == k;
    }

    std::string str() const { return (mode == GeneratorMode::fewer_than_k ? "fewer:" : "exactly:") + std::to_string(k); }
};

/// Parses "fewer:K" or "exactly:K".
inline GeneratorSpec parse_generator(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("generator must look like fewer:K or exactly:K");
    const auto mode = text.substr(0, colon);
    const int k = std::stoi(text.substr(colon + 1));
    if (mode == "fewer") return GeneratorSpec::fewer(k);
    if (mode == "exactly") return GeneratorSpec::exactly(k);
    throw std::invalid_argument("unknown generator mode '" + mode + "'");
}

/// |X| for the generator set X.
inline BigInt generator_size(int n, const GeneratorSpec& gen)
{
    BigInt total = 0;
    for (const auto& mu : partitions_of(n))
        if (gen.contains(mu)) total += class_size(mu);
    return total;
}

/// lambda_rho = (1/dim rho) * sum over generator classes of |C| chi_rho(C).
inline BigRat eigenvalue(int n, const Partition& rho, const GeneratorSpec& gen, const Caps& caps = {})
{
    if (rho.size() != n) throw std::invalid_argument("eigenvalue: rho is not a partition of n");
    if (n > caps.character_n)
        throw size_limit_error("eigenvalue: n = " + std::to_string(n) + " above cap " + std::to_string(caps.character_n));
    BigInt acc = 0;
    for (const auto& mu : partitions_of(n))
        if (gen.contains(mu)) acc += class_size(mu) * character(rho, mu, caps);
    return make_rat(acc, dim_irrep(rho));
}

using SpectrumTable = std::vector<std::pair<Partition, BigRat>>;

/// Every eigenvalue, in partitions_of order.
inline SpectrumTable spectrum(int n, const GeneratorSpec& gen, const Caps& caps = {})
{
    SpectrumTable out;
    for (const auto& rho : partitions_of(n)) out.emplace_back(rho, eigenvalue(n, rho, gen, caps));
    return out;
}

inline Partition trivial_partition(int n) { return Partition({n}); }

inline Partition standard_partition(int n)
{
    if (n < 2) throw std::domain_error("(n-1,1) needs n >= 2");
    return Partition({n - 1, 1});
}

/// Closed forms of lambda_(n) and lambda_(n-1,1) for fewer-than-k generators.
inline std::pair<BigRat, BigRat> eigenvalue_closed_top(int n, int k)
{
    if (n < 2 || k < 1 || k > n) throw std::domain_error("eigenvalue_closed_top: need n >= 2 and 1 <= k <= n");
    BigInt top = 0, second = 0;
    for (int i = 0; i < k; ++i) {
        const BigInt term = binomial(n, i) * derangement(n - i);
        top += term;
        second += term * (i - 1);
    }
    return {BigRat(top), make_rat(second, BigInt(n - 1))};
}

/// Closed form of lambda at the sign partition (1^n) for exactly-k generators.
inline BigRat sign_eigenvalue_closed(int n, int k)
{
    if (k < 0 || k >= n) throw std::domain_error("sign_eigenvalue_closed: need 0 <= k < n");
    const BigInt v = binomial(n, k) * (n - k - 1);
    return BigRat(((n - k - 1) % 2 == 0) ? v : BigInt(-v));
}

/**
 * sum_{k=2}^{n} sum_{i=1}^{k-1} (1/(i-1)!) sum_{s=0}^{n-i} (-1)^s/s!,
 * evaluated exactly. It equals n - 2.
 */
inline BigRat nested_derangement_sum(int n)
{
    if (n < 2) throw std::domain_error("nested_derangement_sum: n >= 2");
    std::vector<BigRat> alt(static_cast<std::size_t>(n + 1)); // alt[m] = sum_{s<=m} (-1)^s/s!
    BigRat run = 0;
    for (int s = 0; s <= n; ++s) {
        const BigRat term = make_rat(1, factorial(s));
        run += (s % 2 == 0) ? term : BigRat(-term);
        alt[static_cast<std::size_t>(s)] = run;
    }
    BigRat total = 0;
    for (int k = 2; k <= n; ++k)
        for (int i = 1; i <= k - 1; ++i) total += make_rat(1, factorial(i - 1)) * alt[static_cast<std::size_t>(n - i)];
    return total;
}

/// (sum_k lambda_(n) + (n-1) lambda_(n-1,1), sum_k lambda_(n) - lambda_(n-1,1)),
/// k = 1..n, from the closed forms.
inline std::pair<BigRat, BigRat> top_eigenvalue_sums(int n)
{
    BigRat first = 0, second = 0;
    for (int k = 1; k <= n; ++k) {
        const auto [a, b] = eigenvalue_closed_top(n, k);
        first += a + BigRat(n - 1) * b;
        second += a - b;
    }
    return {first, second};
}

/// The expected values of top_eigenvalue_sums: (n!(n-2), n!(n - (n-2)/(n-1))).
inline std::pair<BigRat, BigRat> top_eigenvalue_sums_expected(int n)
{
    const BigRat f = BigRat(factorial(n));
    return {f * (n - 2), f * (BigRat(n) - make_rat(n - 2, n - 1))};
}

/// Partitions of n-1 obtained by removing one corner box of rho.
inline std::vector<Partition> remove_corner(const Partition& rho)
{
    std::vector<Partition> out;
    const auto& p = rho.parts();
    for (std::size_t r = 0; r < p.size(); ++r) {
        if (r + 1 < p.size() && p[r + 1] == p[r]) continue;
        auto q = p;
        if (--q[r] == 0) q.pop_back();
        out.emplace_back(std::move(q));
    }
    return out;
}

/**
 * Checks lambda_rho^(k) = n/(k dim rho) * sum_mu dim(mu) lambda_mu^(k-1)
 * over the partitions mu obtained by removing a corner of rho, with
 * exactly-k generators on both sides (S_n on the left, S_{n-1} on the right).
 */
inline bool branching_rule_holds(int n, const Partition& rho, int k, const Caps& caps = {})
{
    if (k <= 0 || k >= n) throw std::domain_error("branching_rule_holds: need 0 < k < n");
    const BigRat lhs = eigenvalue(n, rho, GeneratorSpec::exactly(k), caps);
    BigRat acc = 0;
    for (const auto& mu : remove_corner(rho))
        acc += BigRat(dim_irrep(mu)) * eigenvalue(n - 1, mu, GeneratorSpec::exactly(k - 1), caps);
    const BigRat rhs = make_rat(BigInt(n), BigInt(k) * dim_irrep(rho)) * acc;
    return lhs == rhs;
}

struct DimensionBoundRow {
    Partition rho;
    BigRat abs_lambda;
    BigInt dim;
    bool holds = false; // |lambda|^2 dim^2 <= n! |X|
};

/// |lambda_rho| <= sqrt(n! |X|) / dim rho, checked in squared form.
inline std::vector<DimensionBoundRow> dimension_eigenvalue_bound(int n, const GeneratorSpec& gen, const Caps& caps = {})
{
    const BigRat rhs = BigRat(factorial(n) * generator_size(n, gen));
    std::vector<DimensionBoundRow> rows;
    for (const auto& [rho, lam] : spectrum(n, gen, caps)) {
        DimensionBoundRow row;
        row.rho = rho;
        row.abs_lambda = abs(lam);
        row.dim = dim_irrep(rho);
        const BigRat d = BigRat(row.dim);
        row.holds = lam * lam * d * d <= rhs;
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace detail {

/**
 * Solves G x = c for a consistent, possibly singular rational system and
 * returns c . x (independent of which solution is picked).
 */
inline BigRat consistent_quadratic_form(std::vector<std::vector<BigRat>> g, std::vector<BigRat> c)
{
    const std::size_t m = c.size();
    const auto rhs = c;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < m; ++col) {
        std::size_t p = row;
        while (p < m && g[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(g[p], g[row]);
        std::swap(c[p], c[row]);
        const BigRat inv = BigRat(1) / g[row][col];
        for (std::size_t j = col; j < m; ++j) g[row][j] *= inv;
        c[row] *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || g[r][col] == 0) continue;
            const BigRat f = g[r][col];
            for (std::size_t j = col; j < m; ++j) g[r][j] -= f * g[row][j];
            c[r] -= f * c[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < m; ++r)
        if (c[r] != 0) throw consistency_error("projection: Gram system is inconsistent");
    std::vector<BigRat> x(m, 0);
    for (std::size_t r = 0; r < row; ++r) x[pivot_col[r]] = c[r];
    BigRat out = 0;
    for (std::size_t i = 0; i < m; ++i) out += rhs[i] * x[i];
    return out;
}

} // namespace detail

struct ProjectionReport {
    int n = 0;
    std::size_t m = 0;
    BigRat norm_f, norm_f0, norm_f1, norm_f2; // squared norms
    std::vector<BigRat> quad_forms;           // f A_s f for s = 1..n
    std::vector<BigInt> overlap_histogram;    // ordered pairs with |sigma cap pi| = t, t = 0..n
};

/**
 * Orthogonal decomposition f = f_0 + f_1 + f_2 of the indicator of F with
 * f_0 constant, f_0 + f_1 in the span of the 1-coset indicators and f_2
 * orthogonal to it.
 */
inline ProjectionReport projection_report(const SymmetricGround& ground, const Family& f, const Caps& caps = {})
{
    require_ground(ground.descriptor(), f);
    const int n = ground.n();
    if (n < 2) throw std::domain_error("projection_report: n >= 2 required");
    if (n > caps.projection_n)
        throw size_limit_error("projection_report: n = " + std::to_string(n) + " above cap " + std::to_string(caps.projection_n));

    const BigInt nf = factorial(n);
    const std::size_t nn = static_cast<std::size_t>(n);

    std::vector<std::uint64_t> counts(nn * nn, 0);
    for (auto idx : f.members()) {
        const auto& p = ground[idx];
        for (int i = 0; i < n; ++i) ++counts[static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(p(i))];
    }

    // Indicators of C_{i->j} (index i*n + j) followed by the constant function.
    const std::size_t m = nn * nn + 1;
    const BigRat same = make_rat(factorial(n - 1), nf);
    const BigRat apart = make_rat(factorial(n - 2), nf);
    std::vector<std::vector<BigRat>> gram(m, std::vector<BigRat>(m, 0));
    std::vector<BigRat> c(m, 0);
    for (std::size_t a = 0; a < nn * nn; ++a) {
        const auto i = a / nn, j = a % nn;
        for (std::size_t b = 0; b < nn * nn; ++b) {
            const auto i2 = b / nn, j2 = b % nn;
            if (i == i2 && j == j2) gram[a][b] = same;
            else if (i != i2 && j != j2) gram[a][b] = apart;
        }
        gram[a][m - 1] = gram[m - 1][a] = make_rat(1, n);
        c[a] = make_rat(BigInt(counts[a]), nf);
    }
    gram[m - 1][m - 1] = 1;
    c[m - 1] = make_rat(BigInt(f.size()), nf);

    ProjectionReport rep;
    rep.n = n;
    rep.m = f.size();
    rep.norm_f = make_rat(BigInt(f.size()), nf);
    rep.norm_f0 = rep.norm_f * rep.norm_f;
    const BigRat u1 = detail::consistent_quadratic_form(std::move(gram), std::move(c));
    rep.norm_f1 = u1 - rep.norm_f0;
    rep.norm_f2 = rep.norm_f - u1;

    std::vector<std::uint64_t> hist(nn + 1, 0);
    const auto& mem = f.members();
    for (auto x : mem)
        for (auto y : mem) ++hist[static_cast<std::size_t>(ground.intersection(x, y))];
    std::uint64_t below = 0;
    for (int s = 1; s <= n; ++s) {
        below += hist[static_cast<std::size_t>(s - 1)];
        rep.quad_forms.push_back(BigRat(BigInt(below)));
    }
    for (auto h : hist) rep.overlap_histogram.push_back(BigInt(h));
    return rep;
}

struct SpectralIdentity {
    BigInt direct;     // I(F) from the overlap histogram
    BigRat adjacency;  // n M^2 - sum_s f A_s f
    BigRat projection; // the decomposed form
    bool holds() const { return BigRat(direct) == adjacency && BigRat(direct) == projection; }
};

/**
 * Evaluates I(F) three ways: directly; as n M^2 - sum_s f A_s f; and as
 * ((n-1)!)^2 [x^2 (n-2)/(n-1) + x n/(n-1)] - (n!)^2/(n-1) |f_2|^2
 * - sum_s f_2 A_s f_2 with x = M/(n-1)! and
 * f_2 A_s f_2 = f A_s f - n!(lambda_(n) |f_0|^2 + lambda_(n-1,1) |f_1|^2).
 */
inline SpectralIdentity spectral_identity_check(const SymmetricGround& ground, const Family& f, const Caps& caps = {})
{
    const auto rep = projection_report(ground, f, caps);
    const int n = rep.n;
    const BigRat M = BigRat(BigInt(rep.m));
    const BigRat nf = BigRat(factorial(n));
    const BigRat f1 = BigRat(factorial(n - 1));

    SpectralIdentity out;
    out.direct = 0;
    for (int t = 0; t <= n; ++t) out.direct += rep.overlap_histogram[static_cast<std::size_t>(t)] * t;

    BigRat sum_q = 0;
    for (const auto& q : rep.quad_forms) sum_q += q;
    out.adjacency = BigRat(n) * M * M - sum_q;

    const Partition top = trivial_partition(n), second = standard_partition(n);
    BigRat sum_f2 = 0;
    for (int s = 1; s <= n; ++s) {
        const auto gen = GeneratorSpec::fewer(s);
        const BigRat l0 = eigenvalue(n, top, gen, caps);
        const BigRat l1 = eigenvalue(n, second, gen, caps);
        sum_f2 += rep.quad_forms[static_cast<std::size_t>(s - 1)] - nf * (l0 * rep.norm_f0 + l1 * rep.norm_f1);
    }
    const BigRat x = M / f1;
    const BigRat n1 = BigRat(n - 1);
    out.projection = f1 * f1 * (x * x * BigRat(n - 2) / n1 + x * BigRat(n) / n1) - nf * nf / n1 * rep.norm_f2 - sum_f2;
    return out;
}

} // namespace ekr
