#pragma once

/**
 * @file verify.hpp
 * @brief The acceptance battery, grouped into suites. Every check is recorded
 * as strings; a check passes iff expected equals actual.
 */

#include "bounds.hpp"
#include "errors.hpp"
#include "exactnum.hpp"
#include "extremal.hpp"
#include "family.hpp"
#include "oracle.hpp"
#include "permgroup.hpp"
#include "schemes.hpp"
#include "spectra.hpp"
#include "vecspace.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace ekr {

struct CheckRecord {
    std::string criterion;
    std::string name;
    std::string params;
    std::string expected;
    std::string actual;
    bool pass = false;
};

/// Observations reported without a pass/fail verdict.
struct DataRecord {
    std::string criterion;
    std::string name;
    std::string params;
    std::string value;
};

struct CriterionSummary {
    std::string id;
    std::string title;
    std::size_t checks = 0;
    std::size_t failed = 0;
    double seconds = 0;
    double limit_seconds = 0;
    bool gating = true;
    bool pass = false;
};

struct RunReport {
    std::string suite;
    std::vector<CriterionSummary> criteria;
    std::vector<CheckRecord> checks;
    std::vector<DataRecord> data;
    double seconds = 0;
    bool cap_refused = false;

    std::size_t passed() const
    {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
    }
    std::size_t failed() const { return checks.size() - passed(); }
    bool all_pass() const
    {
        return std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.pass; });
    }
};

struct VerifyOptions {
    unsigned workers = 1;
    Caps caps{};
};

class Recorder {
public:
    Recorder(RunReport& report, std::string criterion) : report_(report), criterion_(std::move(criterion)) {}

    bool check(const std::string& name, const std::string& params, const std::string& expected, const std::string& actual)
    {
        report_.checks.push_back({criterion_, name, params, expected, actual, expected == actual});
        return report_.checks.back().pass;
    }

    bool check(const std::string& name, const std::string& params, const BigInt& expected, const BigInt& actual)
    {
        return check(name, params, to_string(expected), to_string(actual));
    }

    bool check(const std::string& name, const std::string& params, const BigRat& expected, const BigRat& actual)
    {
        return check(name, params, to_string(expected), to_string(actual));
    }

    bool check_true(const std::string& name, const std::string& params, bool ok)
    {
        return check(name, params, "true", ok ? "true" : "false");
    }

    /// Tallies many boolean outcomes into a single "k/N" record.
    bool tally(const std::string& name, const std::string& params, std::size_t good, std::size_t total)
    {
        return check(name, params, std::to_string(total) + "/" + std::to_string(total),
                     std::to_string(good) + "/" + std::to_string(total));
    }

    void data(const std::string& name, const std::string& params, const std::string& value)
    {
        report_.data.push_back({criterion_, name, params, value});
    }

private:
    RunReport& report_;
    std::string criterion_;
};

inline Family random_family(const GroundDescriptor& d, std::size_t ground_size, std::size_t m, std::mt19937_64& rng)
{
    std::vector<std::size_t> all(ground_size);
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::vector<std::size_t> pick;
    std::sample(all.begin(), all.end(), std::back_inserter(pick), static_cast<std::ptrdiff_t>(m), rng);
    return Family(d, std::move(pick));
}

inline std::size_t uniform_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

namespace detail {

inline std::string kv(std::initializer_list<std::pair<const char*, std::string>> items)
{
    std::string s;
    for (const auto& [k, v] : items) {
        if (!s.empty()) s += ' ';
        s += k;
        s += '=';
        s += v;
    }
    return s;
}

inline std::string num(long long v) { return std::to_string(v); }

inline std::string fmt_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

inline Subspace coordinate_subspace(int n, int t, int q)
{
    std::vector<std::vector<std::uint8_t>> rows;
    for (int i = 0; i < t; ++i) {
        std::vector<std::uint8_t> r(static_cast<std::size_t>(n), 0);
        r[static_cast<std::size_t>(i)] = 1;
        rows.push_back(std::move(r));
    }
    return Subspace(n, q, rows);
}

inline Caps without_table(Caps c)
{
    c.pair_table = 0;
    return c;
}

} // namespace detail

// ---------------------------------------------------------------- criteria

/// Plane star in G_2(4,2) at M = 7, certified by exhaustion.
inline void criterion_plane_star(Recorder& rec, const VerifyOptions& opt)
{
    const auto g = enumerate_subspaces(4, 2, 2, opt.caps, opt.workers);
    SearchOptions so;
    so.workers = opt.workers;
    so.budget = opt.caps.search_budget;
    const auto r = brute_force_mi(g, 7, so, opt.caps);
    const std::string p = "ground=grassmann(4,2,2) M=7";
    rec.check("exhaustive MI", p, BigInt(56), r.best);
    rec.check("star_value(4,2,1,2)", p, BigInt(56), star_value(4, 2, 1, 2));
    rec.check("general Grassmann bound", p, BigRat(56), bound_grassmann_general(4, 2, 2, 7).value);
    const auto refined = bound_grassmann_refined(4, 2, 2, 7);
    rec.check_true("refined Grassmann bound applies", p, refined.valid);
    rec.check("refined Grassmann bound", p, BigRat(56), refined.value);
    const auto star = full_t_star(g, detail::coordinate_subspace(4, 1, 2));
    rec.check("direct I of a point star", p, BigInt(56), total_intersection(g, star));
    rec.data("optima", p, std::to_string(r.optima_count));
}

/// Point stabilizer at n = 3, 4 by exhaustion.
inline void criterion_point_stabilizer_small(Recorder& rec, const VerifyOptions& opt)
{
    for (int n : {3, 4}) {
        const SymmetricGround g(n, opt.caps);
        const std::size_t m = factorial(n - 1).convert_to<std::size_t>();
        SearchOptions so;
        so.workers = opt.workers;
        so.budget = opt.caps.search_budget;
        const auto r = brute_force_mi(g, m, so, opt.caps);
        const BigInt expected = 2 * factorial(n - 1) * factorial(n - 1);
        const std::string p = detail::kv({{"n", detail::num(n)}, {"M", detail::num(static_cast<long long>(m))}});
        rec.check("exhaustive MI", p, expected, r.best);
        rec.check("symmetric bound", p, BigRat(expected), bound_symmetric(n, BigInt(m)).value);
        rec.check("t0_value(n,1,0)", p, expected, t0_value(n, 1, 0));
    }
}

/// Point stabilizer at n = 5 by a local-search lower bound meeting the upper bound.
inline void criterion_point_stabilizer_sandwich(Recorder& rec, const VerifyOptions& opt)
{
    const SymmetricGround g(5, opt.caps);
    const auto start = coset_family(g, CosetSpec({{1, 1}}));
    const auto r = local_search_mi(g, 24, start, 1, 10000, opt.caps);
    const std::string p = "n=5 M=24 start=C(1->1)";
    rec.check_true("local search reaches 1152", p + " found=" + to_string(r.best), r.best >= 1152);
    rec.check("symmetric bound", p, BigRat(1152), bound_symmetric(5, 24).value);
    rec.check("lower bound equals upper bound", p, BigRat(r.best), bound_symmetric(5, 24).value);
}

/// Exact derangement and eigenvalue-sum identities.
inline void criterion_identities(Recorder& rec, const VerifyOptions&)
{
    for (int n = 5; n <= 30; ++n)
        rec.check("nested derangement sum", "n=" + detail::num(n), BigRat(n - 2), nested_derangement_sum(n));
    for (int n = 5; n <= 10; ++n) {
        const auto got = top_eigenvalue_sums(n);
        const auto want = top_eigenvalue_sums_expected(n);
        const BigRat f = BigRat(factorial(n));
        rec.check("expected first sum is n!(n-2)", "n=" + detail::num(n), f * (n - 2), want.first);
        rec.check("top eigenvalue sum, first", "n=" + detail::num(n), want.first, got.first);
        rec.check("top eigenvalue sum, second", "n=" + detail::num(n), want.second, got.second);
    }
}

/// Character-sum eigenvalues against closed forms and the branching rule.
inline void criterion_spectra(Recorder& rec, const VerifyOptions& opt)
{
    for (int n : {5, 6, 7}) {
        for (int k = 1; k <= n; ++k) {
            const auto closed = eigenvalue_closed_top(n, k);
            BigInt top = 0;
            for (int i = 0; i < k; ++i) top += binomial(n, i) * derangement(n - i);
            const std::string p = detail::kv({{"n", detail::num(n)}, {"gen", "fewer:" + detail::num(k)}});
            rec.check("trivial eigenvalue closed form", p, BigRat(top), closed.first);
            rec.check("trivial eigenvalue", p, closed.first,
                      eigenvalue(n, trivial_partition(n), GeneratorSpec::fewer(k), opt.caps));
            rec.check("standard eigenvalue", p, closed.second,
                      eigenvalue(n, standard_partition(n), GeneratorSpec::fewer(k), opt.caps));
        }
        const Partition sign = transpose(trivial_partition(n));
        for (int k = 0; k < n; ++k)
            rec.check("sign eigenvalue", detail::kv({{"n", detail::num(n)}, {"gen", "exactly:" + detail::num(k)}}),
                      sign_eigenvalue_closed(n, k), eigenvalue(n, sign, GeneratorSpec::exactly(k), opt.caps));
    }
    for (int n : {5, 6}) {
        std::size_t good = 0, total = 0;
        for (const auto& rho : partitions_of(n))
            for (int k = 1; k < n; ++k) {
                ++total;
                if (branching_rule_holds(n, rho, k, opt.caps)) ++good;
            }
        rec.tally("branching rule, all rho and 0<k<n", "n=" + detail::num(n), good, total);
    }
}

/// Projection decomposition of I on random families and all 1-cosets.
inline void criterion_decomposition(Recorder& rec, const VerifyOptions& opt)
{
    std::mt19937_64 rng(0x5eed0006);
    auto run = [&](const SymmetricGround& g, const Family& f, std::size_t& good) {
        if (spectral_identity_check(g, f, opt.caps).holds()) ++good;
    };
    {
        const SymmetricGround g(4, opt.caps);
        std::size_t good = 0;
        for (int i = 0; i < 50; ++i) run(g, random_family(g.descriptor(), g.size(), uniform_size(rng, 2, 12), rng), good);
        rec.tally("spectral identity, random families", "n=4 sizes=2..12", good, 50);
    }
    {
        const SymmetricGround g(5, opt.caps);
        std::size_t good = 0;
        for (int i = 0; i < 10; ++i) run(g, random_family(g.descriptor(), g.size(), uniform_size(rng, 6, 48), rng), good);
        rec.tally("spectral identity, random families", "n=5 sizes=6..48", good, 10);
    }
    for (int n : {4, 5}) {
        const SymmetricGround g(n, opt.caps);
        std::size_t good = 0, flat = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const auto f = coset_family(g, CosetSpec({{i, j}}));
                run(g, f, good);
                if (projection_report(g, f, opt.caps).norm_f2 == 0) ++flat;
            }
        const auto total = static_cast<std::size_t>(n * n);
        rec.tally("spectral identity, all 1-cosets", "n=" + detail::num(n), good, total);
        rec.tally("1-cosets lie in U_0 + U_1", "n=" + detail::num(n), flat, total);
    }
}

/// Scheme axioms and the inner/dual distribution identities.
inline void criterion_scheme_axioms(Recorder& rec, const VerifyOptions& opt)
{
    for (int q : {2, 3})
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; 2 * k <= n; ++k) {
                const auto t = grassmann_tables(n, k, q);
                const std::string p = detail::kv({{"n", detail::num(n)}, {"k", detail::num(k)}, {"q", detail::num(q)}});
                rec.check_true("Grassmann PQ = vI", p, pq_is_scalar(t));
                rec.check_true("Grassmann P/v = Q/u", p, pq_ratio_relation_holds(t));
                rec.check_true("Grassmann valencies and multiplicities", p, scheme_basics_hold(t));
                bool counts = true;
                for (int i = 0; i <= t.classes; ++i)
                    if (t.eigenvalue(i, 0) != BigRat(count_at_intersection(n, k, k, k - i, q))) counts = false;
                rec.check_true("Grassmann valencies match subspace counts", p, counts);
            }
    for (int n = 1; n <= 7; ++n) {
        const auto t = conjugacy_tables(n, opt.caps);
        const std::string p = "n=" + detail::num(n);
        rec.check_true("conjugacy PQ = vI", p, pq_is_scalar(t));
        rec.check_true("conjugacy P/v = Q/u", p, pq_ratio_relation_holds(t));
        rec.check_true("conjugacy valencies and multiplicities", p, scheme_basics_hold(t));
    }

    struct Tally {
        std::size_t nonneg = 0, b0 = 0, sum = 0, recon = 0, inter = 0;
    };
    auto distribution_checks = [](const SchemeTables& t, const auto& ground, const Family& f, Tally& tl) {
        const auto inner = inner_distribution(t, ground, f);
        DualDistribution dual;
        try {
            dual = dual_distribution(t, inner, f.size());
            ++tl.recon;
        } catch (const consistency_error&) {
            return;
        }
        if (std::all_of(dual.b.begin(), dual.b.end(), [](const BigRat& b) { return b >= 0; })) ++tl.nonneg;
        if (dual.b.at(0) == 1) ++tl.b0;
        const BigRat sum = std::accumulate(dual.b.begin(), dual.b.end(), BigRat(0));
        if (sum == make_rat(t.v, BigInt(f.size()))) ++tl.sum;
        if (total_intersection_from_inner(t, inner, f.size()) == BigRat(total_intersection(ground, f))) ++tl.inter;
    };
    auto report = [&](const std::string& scheme, const Tally& tl, std::size_t total) {
        const std::string p = "scheme=" + scheme + " families=" + detail::num(static_cast<long long>(total));
        rec.tally("b_j >= 0", p, tl.nonneg, total);
        rec.tally("b_0 = 1", p, tl.b0, total);
        rec.tally("sum b_j = v/M", p, tl.sum, total);
        rec.tally("a recovered from b", p, tl.recon, total);
        rec.tally("I recovered from a", p, tl.inter, total);
    };

    std::mt19937_64 rng(0x5eed0007);
    {
        const std::vector<std::array<int, 3>> params{{4, 2, 2}, {5, 2, 2}, {5, 3, 2}, {4, 2, 3}};
        std::vector<GrassmannGround> grounds;
        std::vector<SchemeTables> tables;
        for (const auto& [n, k, q] : params) {
            grounds.push_back(enumerate_subspaces(n, k, q, opt.caps, opt.workers));
            tables.push_back(grassmann_tables(n, k, q));
        }
        Tally tl;
        for (std::size_t i = 0; i < 200; ++i) {
            const auto& g = grounds[i % grounds.size()];
            const auto f = random_family(g.descriptor(), g.size(), uniform_size(rng, 1, std::min<std::size_t>(g.size(), 40)), rng);
            distribution_checks(tables[i % grounds.size()], g, f, tl);
        }
        report("grassmann", tl, 200);
    }
    {
        std::vector<SymmetricGround> grounds{SymmetricGround(4, opt.caps), SymmetricGround(5, opt.caps)};
        std::vector<SchemeTables> tables{conjugacy_tables(4, opt.caps), conjugacy_tables(5, opt.caps)};
        Tally tl;
        for (std::size_t i = 0; i < 200; ++i) {
            const auto& g = grounds[i % 2];
            const auto f = random_family(g.descriptor(), g.size(), uniform_size(rng, 1, std::min<std::size_t>(g.size(), 40)), rng);
            distribution_checks(tables[i % 2], g, f, tl);
        }
        report("conjugacy", tl, 200);
    }
}

/// The b_1 identity for permutation families.
inline void criterion_b1_identity(Recorder& rec, const VerifyOptions& opt)
{
    std::mt19937_64 rng(0x5eed0008);
    const SymmetricGround g4(4, opt.caps);
    std::size_t good = 0;
    for (int i = 0; i < 100; ++i) {
        const auto f = random_family(g4.descriptor(), g4.size(), uniform_size(rng, 1, g4.size()), rng);
        if (identity_symmetric_b1(g4, f, opt.caps).holds()) ++good;
    }
    rec.tally("b_1 identity, random families", "n=4", good, 100);
    const SymmetricGround g3(3, opt.caps);
    const auto c = identity_symmetric_b1(g3, coset_family(g3, CosetSpec({{1, 1}})), opt.caps);
    rec.check("b_1 of C(1->1)", "n=3", BigRat(2), c.b1);
    rec.check("I of C(1->1)", "n=3", BigInt(8), c.direct);
    rec.check_true("b_1 identity on C(1->1)", "n=3", c.holds());
}

/// Every applicable upper bound dominates every exhaustively certified MI.
inline void criterion_bound_dominance(Recorder& rec, const VerifyOptions& opt)
{
    SearchOptions so;
    so.workers = opt.workers;
    so.budget = opt.caps.search_budget;

    auto dominates = [&](const std::string& bound, const std::string& p, const BigRat& value, const BigInt& mi) {
        rec.check_true(bound + " >= MI", p + " bound=" + to_string(value) + " MI=" + to_string(mi), value >= BigRat(mi));
    };

    auto grassmann_case = [&](const GrassmannGround& g, const SchemeTables& t, std::size_t m) {
        const int n = g.n(), k = g.k(), q = g.q();
        const BigInt M(m);
        const auto r = brute_force_mi(g, m, so, opt.caps);
        const std::string p = detail::kv({{"ground", "grassmann(" + detail::num(n) + "," + detail::num(k) + "," + detail::num(q) + ")"},
                                          {"M", detail::num(static_cast<long long>(m))}});
        const auto general = bound_grassmann_general(n, k, q, M);
        if (general.valid) dominates("general Grassmann bound", p, general.value, r.best);
        const auto refined = bound_grassmann_refined(n, k, q, M);
        if (refined.valid) dominates("refined Grassmann bound", p, refined.value, r.best);
        if (k >= 1 && n >= 2 * k && M <= gaussian_binomial(n - 1, k - 1, q)) {
            const auto lp = lp_dual_feasible_value(n, k, q, M);
            dominates("tail bound at the dual LP value", p, bound_from_tail_lower_bound(n, k, q, M, lp.value), r.best);
        }
        if (n >= 2) {
            const auto dual = dual_distribution(t, inner_distribution(t, g, r.witness), m);
            const auto db = bound_grassmann_dual_b1(n, k, q, dual, M);
            dominates("dual-distribution bound via b_1", p, db.from_b1, r.best);
            dominates("dual-distribution bound via the tail", p, db.from_tail, r.best);
        }
    };

    {
        const auto g = enumerate_subspaces(4, 2, 2, opt.caps, opt.workers);
        grassmann_case(g, grassmann_tables(4, 2, 2), 7);
    }
    {
        const auto g = enumerate_subspaces(3, 1, 2, opt.caps, opt.workers);
        const auto t = grassmann_tables(3, 1, 2);
        for (std::size_t m = 1; m <= 7; ++m) grassmann_case(g, t, m);
    }
    {
        const auto g = enumerate_subspaces(4, 1, 2, opt.caps, opt.workers);
        const auto t = grassmann_tables(4, 1, 2);
        for (std::size_t m = 1; m <= 5; ++m) grassmann_case(g, t, m);
    }
    auto symmetric_case = [&](int n, std::size_t m) {
        const SymmetricGround g(n, opt.caps);
        const auto r = brute_force_mi(g, m, so, opt.caps);
        const std::string p = detail::kv({{"ground", "symmetric(" + detail::num(n) + ")"}, {"M", detail::num(static_cast<long long>(m))}});
        dominates("symmetric bound", p, bound_symmetric(n, BigInt(m)).value, r.best);
    };
    for (std::size_t m = 1; m <= 6; ++m) symmetric_case(3, m);
    symmetric_case(4, 6);
}

/// Closed-form construction values against materialized families.
inline void criterion_construction_values(Recorder& rec, const VerifyOptions& opt)
{
    const Caps lean = detail::without_table(opt.caps);
    for (int q : {2, 3})
        for (int n = 1; n <= 5; ++n)
            for (int k = 1; k <= std::min(3, n); ++k) {
                const auto g = enumerate_subspaces(n, k, q, lean, opt.workers);
                for (int t = 1; t <= k; ++t) {
                    const auto star = full_t_star(g, detail::coordinate_subspace(n, t, q));
                    rec.check("star_value vs direct I",
                              detail::kv({{"n", detail::num(n)}, {"k", detail::num(k)}, {"t", detail::num(t)}, {"q", detail::num(q)}}),
                              total_intersection(g, star), star_value(n, k, t, q));
                }
            }
    for (int n : {4, 5}) {
        const SymmetricGround g(n, opt.caps);
        for (int a0 = 0; a0 <= n - 1; ++a0)
            for (int a1 = 0; a1 <= n - 1; ++a1) {
                if (BigInt(a0) * factorial(n - 1) + BigInt(a1) * factorial(n - 2) > factorial(n)) continue;
                const std::string p = detail::kv({{"n", detail::num(n)}, {"a0", detail::num(a0)}, {"a1", detail::num(a1)}});
                const BigInt closed = t0_value(n, a0, a1);
                rec.check("t0_value vs direct I of the blocks", p, total_intersection(g, t0_blocks(g, a0, a1)), closed);
                const BigInt s = BigInt(a0) * factorial(n - 1) + BigInt(a1) * factorial(n - 2);
                const auto f = t0_family(g, s);
                rec.check("t0_value vs direct I of t0_family", p + " s=" + to_string(s), total_intersection(g, f), closed);
            }
    }
    for (int q : {2, 3})
        for (int n = 2; n <= 8; ++n) {
            const std::string p = detail::kv({{"n", detail::num(n)}, {"q", detail::num(q)}});
            rec.check("plane_star value = star_value(n,2,1,q)", p, star_value(n, 2, 1, q),
                      mi_closed_form(Construction::plane_star, n, q).value);
            if (n >= 6)
                rec.check("solid_star value = star_value(n,3,2,q)", p, star_value(n, 3, 2, q),
                          mi_closed_form(Construction::solid_star, n, q).value);
        }
    for (int n = 3; n <= 7; ++n)
        rec.check("point_stabilizer value = t0_value(n,1,0)", "n=" + detail::num(n), t0_value(n, 1, 0),
                  mi_closed_form(Construction::point_stabilizer, n).value);
}

/// Subspace counts by intersection dimension against enumeration, for every W.
inline void criterion_intersection_counts(Recorder& rec, const VerifyOptions& opt)
{
    const Caps lean = detail::without_table(opt.caps);
    for (int q : {2, 3})
        for (int n = 0; n <= 5; ++n) {
            std::vector<GrassmannGround> grounds;
            for (int d = 0; d <= n; ++d) grounds.push_back(enumerate_subspaces(n, d, q, lean, opt.workers));
            for (int k = 0; k <= n; ++k)
                for (int l = 0; l <= n; ++l) {
                    const auto& gk = grounds[static_cast<std::size_t>(k)];
                    const auto& gl = grounds[static_cast<std::size_t>(l)];
                    const int top = std::min(k, l);
                    std::vector<BigInt> want;
                    for (int j = 0; j <= top; ++j) want.push_back(count_at_intersection(n, k, l, j, q));
                    std::vector<std::size_t> mismatched(static_cast<std::size_t>(top + 1), 0);
                    for (const auto& w : gk.subspaces()) {
                        std::vector<std::uint64_t> seen(static_cast<std::size_t>(top + 1), 0);
                        for (const auto& u : gl.subspaces()) ++seen[static_cast<std::size_t>(intersection_dim(w, u))];
                        for (int j = 0; j <= top; ++j)
                            if (BigInt(seen[static_cast<std::size_t>(j)]) != want[static_cast<std::size_t>(j)])
                                ++mismatched[static_cast<std::size_t>(j)];
                    }
                    for (int j = 0; j <= top; ++j)
                        rec.check("subspaces meeting W in dimension j",
                                  detail::kv({{"n", detail::num(n)}, {"q", detail::num(q)}, {"k", detail::num(k)},
                                              {"l", detail::num(l)}, {"j", detail::num(j)},
                                              {"W", "all " + detail::num(static_cast<long long>(gk.size()))}}),
                                  "0 mismatches", detail::num(static_cast<long long>(mismatched[static_cast<std::size_t>(j)])) + " mismatches");
                }
        }
}

/// Whether every optimal family of size 6 in S_4 is a 1-coset. Reported as data.
inline void criterion_coset_probe(Recorder& rec, const VerifyOptions& opt)
{
    const SymmetricGround g(4, opt.caps);
    SearchOptions so;
    so.workers = opt.workers;
    so.budget = opt.caps.search_budget;
    so.keep_optima = 1000000;
    const auto r = brute_force_mi(g, 6, so, opt.caps);
    std::size_t cosets = 0;
    for (const auto& f : r.optima) {
        const auto tags = classify_witness(g, f);
        if (tags.is_t_star && tags.common_dim == 1) ++cosets;
    }
    const std::string p = "n=4 M=6";
    rec.data("MI", p, to_string(r.best));
    rec.data("optimal families", p, std::to_string(r.optima_count));
    rec.data("optimal families that are 1-cosets", p, std::to_string(cosets));
    rec.data("every optimum is a 1-coset", p, cosets == r.optima.size() && r.optima.size() == r.optima_count ? "yes" : "no");
}

// ---------------------------------------------------------------- suites

struct CriterionDef {
    std::string id;
    std::string title;
    double limit_seconds;
    bool gating;
    std::function<void(Recorder&, const VerifyOptions&)> run;
};

inline std::vector<CriterionDef> all_criteria(const VerifyOptions& opt)
{
    return {
        {"plane_star", "plane star MI in G_2(4,2) at M=7", opt.workers >= 8 ? 120.0 : 600.0, true, criterion_plane_star},
        {"point_stabilizer_small", "point stabilizer MI in S_3 and S_4", 60, true, criterion_point_stabilizer_small},
        {"point_stabilizer_sandwich", "point stabilizer MI in S_5 by sandwich", 60, true, criterion_point_stabilizer_sandwich},
        {"identities", "derangement and eigenvalue-sum identities", 10, true, criterion_identities},
        {"spectra", "eigenvalue closed forms and branching rule", 120, true, criterion_spectra},
        {"decomposition", "projection decomposition of I", 300, true, criterion_decomposition},
        {"scheme_axioms", "scheme axioms and distribution identities", 300, true, criterion_scheme_axioms},
        {"b1_identity", "b_1 identity in S_n", 60, true, criterion_b1_identity},
        {"bound_dominance", "upper bounds dominate exhaustive MI", 900, true, criterion_bound_dominance},
        {"construction_values", "construction values against direct I", 120, true, criterion_construction_values},
        {"intersection_counts", "subspace counts by intersection dimension", 60, true, criterion_intersection_counts},
        {"coset_probe", "are all optima in S_4 at M=6 1-cosets (data)", 60, false, criterion_coset_probe},
    };
}

inline std::vector<std::string> suite_names() { return {"identities", "schemes", "bounds", "oracle", "all"}; }

inline std::vector<std::string> suite_members(const std::string& suite)
{
    if (suite == "identities") return {"identities", "spectra", "decomposition", "b1_identity"};
    if (suite == "schemes") return {"scheme_axioms", "intersection_counts"};
    if (suite == "bounds") return {"bound_dominance", "construction_values"};
    if (suite == "oracle") return {"plane_star", "point_stabilizer_small", "point_stabilizer_sandwich", "coset_probe"};
    if (suite == "all") {
        std::vector<std::string> ids;
        for (const auto& c : all_criteria({})) ids.push_back(c.id);
        return ids;
    }
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

/// Runs one criterion, appending its checks and a summary to the report.
inline const CriterionSummary& run_criterion(RunReport& report, const CriterionDef& def, const VerifyOptions& opt)
{
    using clock = std::chrono::steady_clock;
    const std::size_t first = report.checks.size();
    Recorder rec(report, def.id);
    const auto t0 = clock::now();
    try {
        def.run(rec, opt);
    } catch (const size_limit_error& e) {
        report.cap_refused = true;
        rec.check("completed", "", "true", std::string("refused: ") + e.what());
    } catch (const std::exception& e) {
        rec.check("completed", "", "true", std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    rec.check_true("runtime within limit", "seconds=" + detail::fmt_seconds(secs) + " limit=" + detail::fmt_seconds(def.limit_seconds),
                   secs <= def.limit_seconds);
    CriterionSummary s;
    s.id = def.id;
    s.title = def.title;
    s.limit_seconds = def.limit_seconds;
    s.seconds = secs;
    s.gating = def.gating;
    s.checks = report.checks.size() - first;
    s.failed = static_cast<std::size_t>(
        std::count_if(report.checks.begin() + static_cast<std::ptrdiff_t>(first), report.checks.end(), [](const auto& c) { return !c.pass; }));
    s.pass = s.failed == 0;
    report.criteria.push_back(s);
    return report.criteria.back();
}

inline RunReport run_suite(const std::string& suite, const VerifyOptions& opt = {},
                           const std::function<void(const CriterionSummary&)>& on_done = {})
{
    const auto wanted = suite_members(suite);
    RunReport report;
    report.suite = suite;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& def : all_criteria(opt)) {
        if (std::find(wanted.begin(), wanted.end(), def.id) == wanted.end()) continue;
        const auto& s = run_criterion(report, def, opt);
        if (on_done) on_done(s);
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace ekr
