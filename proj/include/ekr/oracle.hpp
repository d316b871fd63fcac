#pragma once

/**
 * @file oracle.hpp
 * @brief Direct total intersection numbers and exhaustive / local search for
 * MI on desk-scale ground sets.
 */

#include "errors.hpp"
#include "exactnum.hpp"
#include "family.hpp"
#include "permgroup.hpp"
#include "vecspace.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <thread>
#include <vector>

namespace ekr {

/// Sum over ordered pairs of members of int(A,B), by definition.
template <class Ground>
BigInt total_intersection_pair(const Ground& ground, const Family& f1, const Family& f2)
{
    require_family_of(ground, f1);
    require_family_of(ground, f2);
    std::uint64_t acc = 0;
    for (auto x : f1.members())
        for (auto y : f2.members()) acc += static_cast<std::uint64_t>(ground.intersection(x, y));
    return BigInt(acc);
}

inline BigInt total_intersection(const GrassmannGround& ground, const Family& f)
{
    return total_intersection_pair(ground, f, f);
}

/// n x n matrix of |F_{i->j}|, row-major, 0-based.
inline std::vector<std::uint64_t> position_counts(const SymmetricGround& ground, const Family& f)
{
    const auto n = static_cast<std::size_t>(ground.n());
    std::vector<std::uint64_t> counts(n * n, 0);
    for (auto idx : f.members()) {
        const auto& p = ground[idx];
        for (std::size_t i = 0; i < n; ++i) ++counts[i * n + static_cast<std::size_t>(p(static_cast<int>(i)))];
    }
    return counts;
}

/// sum_{i,j} |F_{i->j}|^2.
inline BigInt total_intersection(const SymmetricGround& ground, const Family& f)
{
    require_family_of(ground, f);
    BigInt acc = 0;
    for (auto c : position_counts(ground, f)) acc += BigInt(c) * c;
    return acc;
}

/// Structural description of a family.
struct WitnessTags {
    int common_dim = 0;           // dim of the common intersection / number of common fixed positions
    bool in_t_star = false;       // common_dim >= 1
    bool is_t_star = false;       // equal to the full star (or coset) on that common part
    bool union_of_1_cosets = false; // permutations only: disjoint union of 1-cosets
};

inline WitnessTags classify_witness(const GrassmannGround& ground, const Family& f)
{
    require_family_of(ground, f);
    WitnessTags tags;
    if (f.empty()) return tags;
    Subspace common = ground[f.members().front()];
    for (auto idx : f.members()) common = subspace_intersection(common, ground[idx]);
    tags.common_dim = common.dim();
    tags.in_t_star = tags.common_dim >= 1;
    const int t = tags.common_dim;
    tags.is_t_star = tags.in_t_star &&
                     BigInt(f.size()) == gaussian_binomial(ground.n() - t, ground.k() - t, ground.q());
    return tags;
}

inline WitnessTags classify_witness(const SymmetricGround& ground, const Family& f)
{
    require_family_of(ground, f);
    WitnessTags tags;
    if (f.empty()) return tags;
    const int n = ground.n();
    const auto nn = static_cast<std::size_t>(n);
    const auto counts = position_counts(ground, f);
    const std::uint64_t m = f.size();
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j)
            if (counts[i * nn + j] == m) ++tags.common_dim;
    tags.in_t_star = tags.common_dim >= 1;
    tags.is_t_star = tags.in_t_star && BigInt(m) == factorial(n - tags.common_dim);

    const auto block = factorial(n - 1).convert_to<std::uint64_t>();
    auto all_blocks = [&](auto get) {
        for (std::size_t b = 0; b < nn; ++b) {
            const auto c = get(b);
            if (c != 0 && c != block) return false;
        }
        return true;
    };
    for (std::size_t a = 0; a < nn && !tags.union_of_1_cosets; ++a) {
        if (all_blocks([&](std::size_t b) { return counts[a * nn + b]; })) tags.union_of_1_cosets = true;
        if (all_blocks([&](std::size_t b) { return counts[b * nn + a]; })) tags.union_of_1_cosets = true;
    }
    return tags;
}

/// int(x,y) for every pair of ground elements, as a dense byte table.
class WeightTable {
public:
    template <class Ground>
    WeightTable(const Ground& ground, const Caps& caps = {}) : n_(ground.size())
    {
        if (n_ > caps.pair_table)
            throw size_limit_error("weight table: ground of size " + std::to_string(n_) + " above pair-table cap " +
                                   std::to_string(caps.pair_table));
        w_.resize(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j)
                w_[i * n_ + j] = w_[j * n_ + i] = static_cast<std::uint8_t>(ground.intersection(i, j));
    }

    std::size_t size() const { return n_; }
    int operator()(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }
    const std::uint8_t* row(std::size_t i) const { return w_.data() + i * n_; }

private:
    std::size_t n_;
    std::vector<std::uint8_t> w_;
};

struct SearchOptions {
    std::uint64_t budget = 100000000;
    unsigned workers = 1;
    std::uint64_t optima_cap = 1000000;
    std::size_t keep_optima = 0; // how many optimal families to return, in enumeration order
};

struct SearchResult {
    std::size_t m = 0;
    BigInt best = 0;
    std::uint64_t optima_count = 0;
    bool count_capped = false;
    bool exhaustive = false;
    Family witness;
    std::vector<Family> optima;
    std::uint64_t steps = 0; // local search: improving swaps taken
};

namespace detail {

struct ExhaustiveWorker {
    const WeightTable* w = nullptr;
    std::size_t n = 0, m = 0;
    std::uint64_t cap = 0;
    std::size_t keep = 0;

    std::uint64_t best = 0;
    bool any = false;
    std::uint64_t count = 0;
    std::vector<std::size_t> witness;
    std::vector<std::vector<std::size_t>> kept;

    std::vector<std::uint32_t> gain;
    std::vector<std::size_t> chosen;

    void record(std::uint64_t value)
    {
        if (!any || value > best) {
            any = true;
            best = value;
            count = 0;
            witness = chosen;
            kept.clear();
        }
        if (value == best) {
            if (count < cap) ++count;
            if (kept.size() < keep) kept.push_back(chosen);
        }
    }

    void add(std::size_t y)
    {
        const auto* r = w->row(y);
        for (std::size_t x = 0; x < n; ++x) gain[x] += r[x];
    }
    void remove(std::size_t y)
    {
        const auto* r = w->row(y);
        for (std::size_t x = 0; x < n; ++x) gain[x] -= r[x];
    }

    void descend(std::size_t start, std::uint64_t value)
    {
        const std::size_t depth = chosen.size();
        if (depth + 1 == m) {
            for (std::size_t x = start; x + (m - depth) <= n; ++x) {
                chosen.push_back(x);
                record(value + 2u * gain[x] + static_cast<std::uint64_t>((*w)(x, x)));
                chosen.pop_back();
            }
            return;
        }
        for (std::size_t x = start; x + (m - depth) <= n; ++x) {
            const std::uint64_t next = value + 2u * gain[x] + static_cast<std::uint64_t>((*w)(x, x));
            chosen.push_back(x);
            add(x);
            descend(x + 1, next);
            remove(x);
            chosen.pop_back();
        }
    }

    void run_leading(std::size_t lead)
    {
        gain.assign(n, 0);
        chosen.assign(1, lead);
        add(lead);
        const std::uint64_t v0 = static_cast<std::uint64_t>((*w)(lead, lead));
        if (m == 1) record(v0);
        else descend(lead + 1, v0);
        chosen.clear();
    }
};

} // namespace detail

/**
 * Exhaustive MI over all M-subsets of the ground set, in lexicographic order
 * of index sets. Leading indices are dealt round-robin to the workers; the
 * merged result (best value, optimum count, first optimum) does not depend on
 * the worker count.
 */
template <class Ground>
SearchResult brute_force_mi(const Ground& ground, std::size_t m, const SearchOptions& opt = {}, const Caps& caps = {})
{
    const std::size_t n = ground.size();
    if (m > n) throw std::invalid_argument("brute_force_mi: M exceeds the ground size");
    const BigInt states = binomial(static_cast<int>(n), static_cast<int>(m));
    if (states > BigInt(opt.budget))
        throw size_limit_error("brute_force_mi: C(" + std::to_string(n) + "," + std::to_string(m) + ") = " +
                               to_string(states) + " exceeds the budget " + std::to_string(opt.budget));
    SearchResult res;
    res.m = m;
    res.exhaustive = true;
    if (m == 0) {
        res.optima_count = 1;
        res.witness = Family(ground.descriptor(), {});
        if (opt.keep_optima) res.optima.push_back(res.witness);
        return res;
    }
    const WeightTable w(ground, caps);
    const unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(n - m + 1)));
    std::vector<std::vector<detail::ExhaustiveWorker>> per_lead(workers);
    auto job = [&](unsigned id) {
        for (std::size_t lead = id; lead + m <= n; lead += workers) {
            detail::ExhaustiveWorker wk;
            wk.w = &w;
            wk.n = n;
            wk.m = m;
            wk.cap = opt.optima_cap;
            wk.keep = opt.keep_optima;
            wk.run_leading(lead);
            per_lead[id].push_back(std::move(wk));
        }
    };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < workers; ++id) pool.emplace_back(job, id);
        for (auto& t : pool) t.join();
    }
    // Merge in leading-index order so that "first optimum" is lexicographic.
    std::vector<const detail::ExhaustiveWorker*> ordered(n - m + 1, nullptr);
    for (unsigned id = 0; id < workers; ++id)
        for (std::size_t j = 0; j < per_lead[id].size(); ++j) ordered[id + j * workers] = &per_lead[id][j];
    std::uint64_t best = 0;
    bool any = false;
    for (const auto* wk : ordered)
        if (wk->any && (!any || wk->best > best)) best = wk->best, any = true;
    std::uint64_t count = 0;
    bool witness_set = false;
    for (const auto* wk : ordered) {
        if (!wk->any || wk->best != best) continue;
        count = std::min(opt.optima_cap, count + wk->count);
        if (!witness_set) {
            res.witness = Family(ground.descriptor(), wk->witness);
            witness_set = true;
        }
        for (const auto& k : wk->kept)
            if (res.optima.size() < opt.keep_optima) res.optima.emplace_back(ground.descriptor(), k);
    }
    res.best = best;
    res.optima_count = count;
    res.count_capped = count >= opt.optima_cap;
    return res;
}

namespace detail {

/// Marginal weights for swap moves. The table model serves every ground with
/// a pairwise table; permutations without one use position counts.
class SwapModel {
public:
    virtual ~SwapModel() = default;
    virtual std::uint64_t gain(std::size_t x) const = 0; // sum_{y in F} int(x,y)
    virtual int weight(std::size_t x, std::size_t y) const = 0;
    virtual void insert(std::size_t x) = 0;
    virtual void erase(std::size_t x) = 0;
};

class TableSwapModel final : public SwapModel {
public:
    explicit TableSwapModel(const WeightTable& w) : w_(w), g_(w.size(), 0) {}
    std::uint64_t gain(std::size_t x) const override { return g_[x]; }
    int weight(std::size_t x, std::size_t y) const override { return w_(x, y); }
    void insert(std::size_t y) override
    {
        const auto* r = w_.row(y);
        for (std::size_t x = 0; x < g_.size(); ++x) g_[x] += r[x];
    }
    void erase(std::size_t y) override
    {
        const auto* r = w_.row(y);
        for (std::size_t x = 0; x < g_.size(); ++x) g_[x] -= r[x];
    }

private:
    const WeightTable& w_;
    std::vector<std::uint64_t> g_;
};

class PositionSwapModel final : public SwapModel {
public:
    explicit PositionSwapModel(const SymmetricGround& g)
        : g_(g), n_(static_cast<std::size_t>(g.n())), counts_(n_ * n_, 0)
    {
    }
    std::uint64_t gain(std::size_t x) const override
    {
        const auto& p = g_[x];
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < n_; ++i) acc += counts_[i * n_ + static_cast<std::size_t>(p(static_cast<int>(i)))];
        return acc;
    }
    int weight(std::size_t x, std::size_t y) const override { return g_.intersection(x, y); }
    void insert(std::size_t x) override { bump(x, +1); }
    void erase(std::size_t x) override { bump(x, -1); }

private:
    void bump(std::size_t x, int d)
    {
        const auto& p = g_[x];
        for (std::size_t i = 0; i < n_; ++i) counts_[i * n_ + static_cast<std::size_t>(p(static_cast<int>(i)))] += static_cast<std::uint64_t>(d);
    }
    const SymmetricGround& g_;
    std::size_t n_;
    std::vector<std::uint64_t> counts_;
};

template <class Ground>
SearchResult local_search_core(const Ground& ground, SwapModel& model, std::size_t m, const std::optional<Family>& start,
                               std::uint64_t seed, std::uint64_t max_steps)
{
    const std::size_t n = ground.size();
    if (m > n) throw std::invalid_argument("local_search_mi: M exceeds the ground size");
    std::vector<char> in(n, 0);
    std::vector<std::size_t> members;
    if (start) {
        require_family_of(ground, *start);
        if (start->size() != m) throw std::invalid_argument("local_search_mi: start family has the wrong size");
        members = start->members();
    } else {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        std::mt19937_64 rng(seed);
        std::shuffle(all.begin(), all.end(), rng);
        members.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));
    }
    std::uint64_t value = 0;
    for (auto x : members) {
        value += 2 * model.gain(x) + static_cast<std::uint64_t>(model.weight(x, x));
        model.insert(x);
        in[x] = 1;
    }

    SearchResult res;
    res.m = m;
    for (; res.steps < max_steps; ++res.steps) {
        std::int64_t best_delta = 0;
        std::size_t best_out = 0, best_in = 0;
        for (std::size_t oi = 0; oi < members.size(); ++oi) {
            const std::size_t x = members[oi];
            const std::int64_t out_part = -2 * static_cast<std::int64_t>(model.gain(x)) + model.weight(x, x);
            for (std::size_t y = 0; y < n; ++y) {
                if (in[y]) continue;
                const std::int64_t delta = out_part + 2 * static_cast<std::int64_t>(model.gain(y)) -
                                           2 * model.weight(x, y) + model.weight(y, y);
                if (delta > best_delta) best_delta = delta, best_out = oi, best_in = y;
            }
        }
        if (best_delta <= 0) break;
        const std::size_t x = members[best_out];
        model.erase(x);
        in[x] = 0;
        model.insert(best_in);
        in[best_in] = 1;
        members[best_out] = best_in;
        value = static_cast<std::uint64_t>(static_cast<std::int64_t>(value) + best_delta);
    }
    res.best = value;
    res.witness = Family(ground.descriptor(), members);
    res.optima_count = 0;
    return res;
}

} // namespace detail

/// Steepest-ascent single-swap search from `start` (or a seeded random
/// family). Never returns less than the starting value.
inline SearchResult local_search_mi(const GrassmannGround& ground, std::size_t m, const std::optional<Family>& start = {},
                                    std::uint64_t seed = 1, std::uint64_t max_steps = 10000, const Caps& caps = {})
{
    const WeightTable w(ground, caps);
    detail::TableSwapModel model(w);
    return detail::local_search_core(ground, model, m, start, seed, max_steps);
}

inline SearchResult local_search_mi(const SymmetricGround& ground, std::size_t m, const std::optional<Family>& start = {},
                                    std::uint64_t seed = 1, std::uint64_t max_steps = 10000, const Caps& caps = {})
{
    if (ground.size() <= caps.pair_table) {
        const WeightTable w(ground, caps);
        detail::TableSwapModel model(w);
        return detail::local_search_core(ground, model, m, start, seed, max_steps);
    }
    detail::PositionSwapModel model(ground);
    return detail::local_search_core(ground, model, m, start, seed, max_steps);
}

} // namespace ekr
