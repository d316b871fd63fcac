#pragma once

/**
 * @file schemes.hpp
 * @brief Eigenvalue tables of the Grassmann and conjugacy association schemes,
 * and inner/dual distributions of families inside them.
 *
 * Index conventions: relations R_0..R_s are indexed by i, eigenspaces by j.
 * P_i(j) is stored at P[j][i] and Q_j(i) at Q[i][j], so that the matrix
 * product P * Q equals v times the identity.
 */

#include "errors.hpp"
#include "exactnum.hpp"
#include "family.hpp"
#include "permgroup.hpp"
#include "vecspace.hpp"

#include <map>
#include <string>
#include <vector>

namespace ekr {

using RatMatrix = std::vector<std::vector<BigRat>>;

struct SchemeTables {
    std::string scheme; // "grassmann" or "conjugacy"
    GroundDescriptor ground;
    int classes = 0; // s
    BigInt v = 0;
    std::vector<BigRat> valencies;      // v_i = P_i(0)
    std::vector<BigRat> multiplicities; // u_j = Q_j(0)
    RatMatrix P;                        // P[j][i] = P_i(j)
    RatMatrix Q;                        // Q[i][j] = Q_j(i)
    std::vector<std::string> relation_labels;
    std::vector<std::string> eigenspace_labels;
    std::vector<Partition> class_types; // conjugacy only: cycle type of relation i
    std::vector<Partition> irreps;      // conjugacy only: partition of eigenspace j

    const BigRat& eigenvalue(int i, int j) const { return P.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(i)); }
    const BigRat& dual_eigenvalue(int j, int i) const { return Q.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }
};

namespace detail {

inline BigRat qpow_rat(int q, int e)
{
    if (e >= 0) return BigRat(ipow(BigInt(q), e));
    return make_rat(1, ipow(BigInt(q), -e));
}

inline int choose2(int r) { return r * (r - 1) / 2; }

/// Generalised Eberlein polynomial E_i(x) of G_q(n,k).
inline BigRat eberlein(int n, int k, int q, int i, int x)
{
    BigRat sum = 0;
    for (int r = 0; r <= i; ++r) {
        BigRat term = qpow_rat(q, choose2(i - r)) * BigRat(gaussian_binomial(k - r, k - i, q)) *
                      BigRat(gaussian_binomial(k - x, r, q)) * BigRat(gaussian_binomial(n + r - k - x, r, q)) *
                      qpow_rat(q, r * x);
        sum += ((i - r) % 2 == 0) ? term : BigRat(-term);
    }
    return sum;
}

/// Dual q-Hahn polynomial D_j(x) of G_q(n,k). The inner binomial is
/// [n+1-j, r]; with [n+1-r, r] the product P*Q is not scalar once j >= 2.
inline BigRat dual_hahn(int n, int k, int q, int j, int x)
{
    const BigRat lead = BigRat(gaussian_binomial(n, j, q) - gaussian_binomial(n, j - 1, q));
    BigRat sum = 0;
    for (int r = 0; r <= j; ++r) {
        const BigInt den = gaussian_binomial(k, r, q) * gaussian_binomial(n - k, r, q);
        BigRat term = qpow_rat(q, choose2(r)) * BigRat(gaussian_binomial(j, r, q)) *
                      BigRat(gaussian_binomial(n + 1 - j, r, q)) / BigRat(den) *
                      BigRat(gaussian_binomial(x, r, q)) * qpow_rat(q, -r * x);
        sum += (r % 2 == 0) ? term : BigRat(-term);
    }
    return lead * sum;
}

} // namespace detail

/**
 * Tables of the Grassmann scheme on G_q(n,k); relation i holds when
 * dim(U ∩ W) = k - i. Only gaussian binomials are needed, so any q >= 2 works.
 * For k > n/2 the scheme is isomorphic (via orthogonal complements, which
 * preserve i) to the one on G_q(n, n-k), whose tables are used.
 */
inline SchemeTables grassmann_tables(int n, int k, int q)
{
    if (n < 0 || k < 0 || k > n) throw std::domain_error("grassmann_tables: need 0 <= k <= n");
    if (q < 2) throw std::domain_error("grassmann_tables: q must be >= 2");
    const int kk = std::min(k, n - k);
    SchemeTables t;
    t.scheme = "grassmann";
    t.ground = GroundDescriptor::grassmann(n, k, q);
    t.classes = kk;
    t.v = gaussian_binomial(n, k, q);
    const auto sz = static_cast<std::size_t>(kk + 1);
    t.P.assign(sz, std::vector<BigRat>(sz));
    t.Q.assign(sz, std::vector<BigRat>(sz));
    for (int a = 0; a <= kk; ++a)
        for (int b = 0; b <= kk; ++b) {
            t.P[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = detail::eberlein(n, kk, q, a, b);
            t.Q[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = detail::dual_hahn(n, kk, q, b, a);
        }
    for (int a = 0; a <= kk; ++a) {
        t.valencies.push_back(t.eigenvalue(a, 0));
        t.multiplicities.push_back(t.dual_eigenvalue(a, 0));
        t.relation_labels.push_back("dim=" + std::to_string(k - a));
        t.eigenspace_labels.push_back("V" + std::to_string(a));
    }
    return t;
}

/// Tables of the conjugacy scheme of S_n. Relations are ordered with the
/// identity class first; eigenspaces follow partitions_of (trivial first,
/// then (n-1,1)).
inline SchemeTables conjugacy_tables(int n, const Caps& caps = {})
{
    if (n < 1) throw std::domain_error("conjugacy_tables: n must be positive");
    if (n > caps.symmetric_n)
        throw size_limit_error("conjugacy_tables: n = " + std::to_string(n) + " above cap " + std::to_string(caps.symmetric_n));
    SchemeTables t;
    t.scheme = "conjugacy";
    t.ground = GroundDescriptor::symmetric(n);
    t.irreps = partitions_of(n);
    t.class_types.assign(t.irreps.rbegin(), t.irreps.rend());
    const int s = static_cast<int>(t.irreps.size()) - 1;
    t.classes = s;
    t.v = factorial(n);
    const auto sz = static_cast<std::size_t>(s + 1);
    t.P.assign(sz, std::vector<BigRat>(sz));
    t.Q.assign(sz, std::vector<BigRat>(sz));
    const Partition identity_type = t.class_types.front();
    for (std::size_t j = 0; j < sz; ++j) {
        const BigInt deg = character(t.irreps[j], identity_type, caps);
        for (std::size_t i = 0; i < sz; ++i) {
            const BigInt chi = character(t.irreps[j], t.class_types[i], caps);
            t.P[j][i] = make_rat(class_size(t.class_types[i]) * chi, deg);
            t.Q[i][j] = BigRat(chi * deg);
        }
    }
    for (std::size_t a = 0; a < sz; ++a) {
        t.valencies.push_back(t.P[0][a]);
        t.multiplicities.push_back(t.Q[0][a]);
        t.relation_labels.push_back(t.class_types[a].str());
        t.eigenspace_labels.push_back(t.irreps[a].str());
    }
    return t;
}

/// P * Q == v * I exactly.
inline bool pq_is_scalar(const SchemeTables& t)
{
    const auto sz = t.P.size();
    for (std::size_t r = 0; r < sz; ++r)
        for (std::size_t c = 0; c < sz; ++c) {
            BigRat acc = 0;
            for (std::size_t m = 0; m < sz; ++m) acc += t.P[r][m] * t.Q[m][c];
            if (acc != (r == c ? BigRat(t.v) : BigRat(0))) return false;
        }
    return true;
}

/// P_i(j)/v_i == Q_j(i)/u_j for all i, j (every scheme here is real-valued).
inline bool pq_ratio_relation_holds(const SchemeTables& t)
{
    for (int i = 0; i <= t.classes; ++i)
        for (int j = 0; j <= t.classes; ++j)
            if (t.eigenvalue(i, j) / t.valencies[static_cast<std::size_t>(i)] !=
                t.dual_eigenvalue(j, i) / t.multiplicities[static_cast<std::size_t>(j)])
                return false;
    return true;
}

/// P_0(j) = 1, sum of valencies = v, sum of multiplicities = v.
inline bool scheme_basics_hold(const SchemeTables& t)
{
    BigRat sv = 0, su = 0;
    for (int j = 0; j <= t.classes; ++j) {
        if (t.eigenvalue(0, j) != 1) return false;
        sv += t.valencies[static_cast<std::size_t>(j)];
        su += t.multiplicities[static_cast<std::size_t>(j)];
    }
    return sv == BigRat(t.v) && su == BigRat(t.v);
}

struct InnerDistribution {
    std::vector<BigRat> a;
};

struct DualDistribution {
    std::vector<BigRat> b;
};

namespace detail {

inline InnerDistribution normalise_counts(const std::vector<BigInt>& counts, std::size_t m)
{
    InnerDistribution d;
    for (const auto& c : counts) d.a.push_back(make_rat(c, BigInt(m)));
    return d;
}

} // namespace detail

/// a_i = (1/M) #{ordered pairs of members in relation R_i}.
inline InnerDistribution inner_distribution(const SchemeTables& t, const GrassmannGround& ground, const Family& f)
{
    require_ground(t.ground, f);
    require_ground(ground.descriptor(), f);
    if (f.empty()) throw std::invalid_argument("inner_distribution: empty family");
    std::vector<BigInt> counts(static_cast<std::size_t>(t.classes + 1), 0);
    std::vector<std::uint64_t> raw(counts.size(), 0);
    for (auto x : f.members())
        for (auto y : f.members()) ++raw[static_cast<std::size_t>(ground.k() - ground.intersection(x, y))];
    for (std::size_t i = 0; i < raw.size(); ++i) counts[i] = raw[i];
    return detail::normalise_counts(counts, f.size());
}

inline InnerDistribution inner_distribution(const SchemeTables& t, const SymmetricGround& ground, const Family& f)
{
    require_ground(t.ground, f);
    require_ground(ground.descriptor(), f);
    if (f.empty()) throw std::invalid_argument("inner_distribution: empty family");
    std::map<Partition, std::size_t> class_index;
    for (std::size_t i = 0; i < t.class_types.size(); ++i) class_index[t.class_types[i]] = i;
    std::vector<std::uint64_t> raw(t.class_types.size(), 0);
    for (auto x : f.members()) {
        for (auto y : f.members()) {
            const auto rel = ground[x].compose(ground[y].inverse());
            ++raw[class_index.at(cycle_type(rel))];
        }
    }
    std::vector<BigInt> counts(raw.begin(), raw.end());
    return detail::normalise_counts(counts, f.size());
}

/**
 * b_j = (1/M) sum_i Q_j(i) a_i. Before returning, a is reconstructed as
 * a_i = (M/v) sum_j b_j P_i(j); a mismatch throws consistency_error.
 */
inline DualDistribution dual_distribution(const SchemeTables& t, const InnerDistribution& inner, std::size_t m)
{
    if (m == 0) throw std::invalid_argument("dual_distribution: M must be positive");
    if (inner.a.size() != static_cast<std::size_t>(t.classes + 1))
        throw std::invalid_argument("dual_distribution: inner distribution has wrong length");
    const BigRat M = BigRat(BigInt(m));
    DualDistribution d;
    for (int j = 0; j <= t.classes; ++j) {
        BigRat acc = 0;
        for (int i = 0; i <= t.classes; ++i) acc += t.dual_eigenvalue(j, i) * inner.a[static_cast<std::size_t>(i)];
        d.b.push_back(acc / M);
    }
    for (int i = 0; i <= t.classes; ++i) {
        BigRat acc = 0;
        for (int j = 0; j <= t.classes; ++j) acc += d.b[static_cast<std::size_t>(j)] * t.eigenvalue(i, j);
        if (acc * M / BigRat(t.v) != inner.a[static_cast<std::size_t>(i)])
            throw consistency_error("dual distribution does not reconstruct the inner distribution at relation " +
                                    std::to_string(i));
    }
    return d;
}

/// I(F) recovered from the inner distribution: M * sum_i int(R_i) a_i, where
/// int(R_i) is k - i (Grassmann) or the number of fixed points of class i
/// (conjugacy, identity class included).
inline BigRat total_intersection_from_inner(const SchemeTables& t, const InnerDistribution& inner, std::size_t m)
{
    BigRat acc = 0;
    for (int i = 0; i <= t.classes; ++i) {
        const int w = t.scheme == "grassmann" ? t.ground.k - i : t.class_types[static_cast<std::size_t>(i)].ones();
        acc += BigRat(w) * inner.a[static_cast<std::size_t>(i)];
    }
    return acc * BigRat(BigInt(m));
}

} // namespace ekr
