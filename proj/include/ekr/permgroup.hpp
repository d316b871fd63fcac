#pragma once

/**
 * @file permgroup.hpp
 * @brief The symmetric group S_n: permutations, partitions, Young-diagram
 * combinatorics, irreducible characters, and coset families.
 */

#include "errors.hpp"
#include "exactnum.hpp"
#include "family.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ekr {

/// A bijection on [n], stored 0-based; printed and parsed 1-based (one-line notation).
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<std::uint8_t> image) : image_(std::move(image))
    {
        std::vector<bool> seen(image_.size(), false);
        for (auto v : image_) {
            if (v >= image_.size() || seen[v]) throw std::invalid_argument("Permutation: image is not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(int n)
    {
        std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), std::uint8_t{0});
        return Permutation(std::move(img));
    }

    /// From 1-based one-line notation, e.g. {2,1,3}.
    static Permutation one_line(const std::vector<int>& values)
    {
        std::vector<std::uint8_t> img;
        for (int v : values) {
            if (v < 1 || v > static_cast<int>(values.size())) throw std::invalid_argument("Permutation: value out of range");
            img.push_back(static_cast<std::uint8_t>(v - 1));
        }
        return Permutation(std::move(img));
    }

    int n() const { return static_cast<int>(image_.size()); }
    /// 0-based image of 0-based point i.
    int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
    const std::vector<std::uint8_t>& image() const { return image_; }

    /// (this ∘ other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const
    {
        if (n() != other.n()) throw std::invalid_argument("Permutation: size mismatch");
        std::vector<std::uint8_t> img(image_.size());
        for (std::size_t i = 0; i < img.size(); ++i) img[i] = image_[other.image_[i]];
        return Permutation(std::move(img));
    }

    Permutation inverse() const
    {
        std::vector<std::uint8_t> img(image_.size());
        for (std::size_t i = 0; i < img.size(); ++i) img[image_[i]] = static_cast<std::uint8_t>(i);
        return Permutation(std::move(img));
    }

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < image_.size(); ++i) s += (i ? " " : "") + std::to_string(image_[i] + 1);
        return s;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint8_t> image_;
};

inline Permutation parse_permutation(const std::string& line)
{
    std::istringstream is(line);
    std::vector<int> v;
    int x = 0;
    while (is >> x) v.push_back(x);
    return Permutation::one_line(v);
}

/// Nonincreasing sequence of positive parts.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be nonincreasing");
        }
    }

    /// Sorts and validates an arbitrary multiset of positive parts.
    static Partition from_unsorted(std::vector<int> parts)
    {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    int ones() const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), 1)); }

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Parses "4,1" (commas or spaces).
inline Partition parse_partition(const std::string& text)
{
    std::string t = text;
    for (char& ch : t)
        if (ch == ',' || ch == '(' || ch == ')') ch = ' ';
    std::istringstream is(t);
    std::vector<int> parts;
    int x = 0;
    while (is >> x) parts.push_back(x);
    if (!is.eof()) throw std::invalid_argument("bad partition: '" + text + "'");
    return Partition(std::move(parts));
}

inline Partition cycle_type(const Permutation& p)
{
    std::vector<bool> seen(static_cast<std::size_t>(p.n()), false);
    std::vector<int> lens;
    for (int i = 0; i < p.n(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) {
            seen[static_cast<std::size_t>(j)] = true;
            ++len;
        }
        lens.push_back(len);
    }
    return Partition::from_unsorted(std::move(lens));
}

inline int fixed_points(const Permutation& p)
{
    int c = 0;
    for (int i = 0; i < p.n(); ++i) c += p(i) == i;
    return c;
}

/// Number of positions where p and r agree; equals fixed_points(p ∘ r⁻¹).
inline int int_perm(const Permutation& p, const Permutation& r)
{
    if (p.n() != r.n()) throw std::invalid_argument("int_perm: size mismatch");
    int c = 0;
    for (int i = 0; i < p.n(); ++i) c += p(i) == r(i);
    return c;
}

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), (n-2,2), ...
inline std::vector<Partition> partitions_of(int n)
{
    if (n < 1) throw std::domain_error("partitions_of: n must be positive");
    std::vector<Partition> out;
    std::vector<int> a{n};
    while (true) {
        out.emplace_back(a);
        // Rightmost part > 1; decrement it and spread the remainder greedily.
        int rem = 0;
        while (!a.empty() && a.back() == 1) {
            ++rem;
            a.pop_back();
        }
        if (a.empty()) break;
        const int v = --a.back();
        ++rem;
        while (rem > 0) {
            const int part = std::min(v, rem);
            a.push_back(part);
            rem -= part;
        }
    }
    return out;
}

inline Partition transpose(const Partition& lambda)
{
    std::vector<int> cols;
    const auto& p = lambda.parts();
    if (!p.empty())
        for (int c = 0; c < p.front(); ++c) {
            int len = 0;
            while (len < lambda.length() && p[static_cast<std::size_t>(len)] > c) ++len;
            cols.push_back(len);
        }
    return Partition(std::move(cols));
}

/// Dimension of the irreducible representation: n! over the product of hook lengths.
inline BigInt dim_irrep(const Partition& lambda)
{
    const auto conj = transpose(lambda);
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.parts()[static_cast<std::size_t>(i)]; ++j) {
            const int arm = lambda.parts()[static_cast<std::size_t>(i)] - j - 1;
            const int leg = conj.parts()[static_cast<std::size_t>(j)] - i - 1;
            hooks *= arm + leg + 1;
        }
    return factorial(lambda.size()) / hooks;
}

/// n! / prod_i (i^{m_i} m_i!): the number of permutations with cycle type mu.
inline BigInt class_size(const Partition& mu)
{
    std::map<int, int> mult;
    for (int p : mu.parts()) ++mult[p];
    BigInt centralizer = 1;
    for (auto [part, m] : mult) centralizer *= ipow(BigInt(part), m) * factorial(m);
    return factorial(mu.size()) / centralizer;
}

namespace detail {

/**
 * Murnaghan-Nakayama on beta-sets. A rim hook of length r corresponds to
 * moving a bead from b to b - r; its leg length is the number of beads
 * strictly between. Results are memoised on (lambda, remaining cycle parts).
 */
class CharacterCache {
public:
    std::int64_t value(const std::vector<int>& lambda, const std::vector<int>& mu)
    {
        const Key key{lambda, mu};
        {
            std::shared_lock lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        const std::int64_t v = compute(lambda, mu);
        std::unique_lock lock(mutex_);
        memo_.emplace(key, v);
        return v;
    }

private:
    using Key = std::pair<std::vector<int>, std::vector<int>>;

    std::int64_t compute(const std::vector<int>& lambda, const std::vector<int>& mu)
    {
        if (mu.empty()) return lambda.empty() ? 1 : 0;
        const int r = mu.front();
        const std::vector<int> rest(mu.begin() + 1, mu.end());
        const int len = static_cast<int>(lambda.size());
        std::vector<int> beta(lambda.size());
        for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

        std::int64_t total = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            const int target = beta[i] - r;
            if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
            int between = 0;
            for (int b : beta) between += (b > target && b < beta[i]);
            std::vector<int> moved = beta;
            moved[i] = target;
            std::sort(moved.begin(), moved.end(), std::greater<>());
            std::vector<int> smaller;
            for (int k = 0; k < len; ++k) {
                const int part = moved[static_cast<std::size_t>(k)] - (len - 1 - k);
                if (part > 0) smaller.push_back(part);
            }
            const std::int64_t sub = value(smaller, rest);
            total += (between % 2 == 0) ? sub : -sub;
        }
        return total;
    }

    std::shared_mutex mutex_;
    std::map<Key, std::int64_t> memo_;
};

inline CharacterCache& character_cache()
{
    static CharacterCache cache;
    return cache;
}

} // namespace detail

/// Irreducible character chi_lambda evaluated on the class of cycle type mu.
inline BigInt character(const Partition& lambda, const Partition& mu, const Caps& caps = {})
{
    if (lambda.size() != mu.size()) throw std::invalid_argument("character: partitions of different n");
    if (lambda.size() > caps.character_n)
        throw size_limit_error("character: n = " + std::to_string(lambda.size()) + " above cap " +
                               std::to_string(caps.character_n));
    return detail::character_cache().value(lambda.parts(), mu.parts());
}

/// S_n in lexicographic one-line order; the identity has index 0.
class SymmetricGround {
public:
    explicit SymmetricGround(int n, const Caps& caps = {}) : n_(n)
    {
        if (n < 1) throw std::domain_error("SymmetricGround: n must be positive");
        if (n > caps.symmetric_n)
            throw size_limit_error("S_" + std::to_string(n) + " above the enumeration cap " + std::to_string(caps.symmetric_n));
        auto img = Permutation::identity(n).image();
        do {
            perms_.emplace_back(img);
        } while (std::next_permutation(img.begin(), img.end()));
    }

    int n() const { return n_; }
    std::size_t size() const { return perms_.size(); }
    GroundDescriptor descriptor() const { return GroundDescriptor::symmetric(n_); }
    const std::vector<Permutation>& permutations() const { return perms_; }
    const Permutation& operator[](std::size_t i) const { return perms_.at(i); }
    int intersection(std::size_t i, std::size_t j) const { return int_perm(perms_.at(i), perms_.at(j)); }

    /// Lexicographic rank (Lehmer code).
    std::size_t index_of(const Permutation& p) const
    {
        if (p.n() != n_) throw std::invalid_argument("index_of: permutation size mismatch");
        std::size_t rank = 0;
        std::vector<bool> used(static_cast<std::size_t>(n_), false);
        std::size_t fact = perms_.size();
        for (int i = 0; i < n_; ++i) {
            fact /= static_cast<std::size_t>(n_ - i);
            std::size_t smaller = 0;
            for (int v = 0; v < p(i); ++v) smaller += !used[static_cast<std::size_t>(v)];
            rank += smaller * fact;
            used[static_cast<std::size_t>(p(i))] = true;
        }
        return rank;
    }

private:
    int n_;
    std::vector<Permutation> perms_;
};

/// Pairs (i_s -> j_s), 1-based, with distinct sources and distinct targets.
class CosetSpec {
public:
    CosetSpec() = default;
    explicit CosetSpec(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs))
    {
        for (std::size_t a = 0; a < pairs_.size(); ++a)
            for (std::size_t b = a + 1; b < pairs_.size(); ++b)
                if (pairs_[a].first == pairs_[b].first || pairs_[a].second == pairs_[b].second)
                    throw std::invalid_argument("CosetSpec: sources and targets must be distinct");
    }

    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    int t() const { return static_cast<int>(pairs_.size()); }

    bool matches(const Permutation& p) const
    {
        for (auto [i, j] : pairs_)
            if (p(i - 1) != j - 1) return false;
        return true;
    }

private:
    std::vector<std::pair<int, int>> pairs_;
};

inline Family coset_family(const SymmetricGround& ground, const CosetSpec& spec)
{
    for (auto [i, j] : spec.pairs())
        if (i < 1 || i > ground.n() || j < 1 || j > ground.n())
            throw std::invalid_argument("coset_family: point outside [n]");
    std::vector<std::size_t> members;
    for (std::size_t idx = 0; idx < ground.size(); ++idx)
        if (spec.matches(ground[idx])) members.push_back(idx);
    return Family(ground.descriptor(), std::move(members));
}

/// Block counts (a0, a1) of the T_0 shape for a family of size s.
struct T0Shape {
    int a0 = 0;
    int a1 = 0;
    BigInt remainder = 0; // members beyond a0 (n-1)! + a1 (n-2)!
};

inline T0Shape t0_shape(int n, const BigInt& s)
{
    if (n < 2) throw std::domain_error("t0 construction needs n >= 2");
    const BigInt f1 = factorial(n - 1), f2 = factorial(n - 2);
    T0Shape sh;
    sh.a0 = static_cast<int>(s / f1);
    const BigInt left = s - sh.a0 * f1;
    sh.a1 = static_cast<int>(left / f2);
    sh.remainder = left - sh.a1 * f2;
    return sh;
}

/// C_{1->1,2->i} for i = 2..a1+1 together with C_{1->j} for j = 2..a0+1.
inline Family t0_blocks(const SymmetricGround& ground, int a0, int a1)
{
    const int n = ground.n();
    if (a0 < 0 || a0 > n - 1 || a1 < 0 || a1 > n - 1)
        throw std::domain_error("t0_blocks: need 0 <= a0, a1 <= n - 1");
    std::vector<std::size_t> members;
    for (std::size_t idx = 0; idx < ground.size(); ++idx) {
        const auto& p = ground[idx];
        const int img1 = p(0) + 1;
        const bool in_two_coset = n >= 2 && img1 == 1 && p(1) + 1 >= 2 && p(1) + 1 <= a1 + 1;
        const bool in_one_coset = img1 >= 2 && img1 <= a0 + 1;
        if (in_two_coset || in_one_coset) members.push_back(idx);
    }
    return Family(ground.descriptor(), std::move(members));
}

/**
 * The T_0(n,s) family: a0 = floor(s/(n-1)!) disjoint 1-cosets, a1 further
 * 2-cosets inside C_{1->1}, and any remaining members taken in enumeration
 * order from the next 2-coset C_{1->1,2->a1+2}.
 */
inline Family t0_family(const SymmetricGround& ground, const BigInt& s)
{
    const int n = ground.n();
    if (s < 0 || s > BigInt(ground.size())) throw std::domain_error("t0_family: need 0 <= s <= n!");
    auto sh = t0_shape(n, s);
    if (sh.a0 == n) sh = {n - 1, n - 1, 0}; // s = n!: C_{1->1} split into its n-1 2-cosets
    Family base = t0_blocks(ground, sh.a0, sh.a1);
    if (sh.remainder == 0) return base;
    const auto pad = coset_family(ground, CosetSpec({{1, 1}, {2, sh.a1 + 2}}));
    const auto take = sh.remainder.convert_to<std::size_t>();
    std::vector<std::size_t> extra(pad.members().begin(), pad.members().begin() + static_cast<std::ptrdiff_t>(take));
    return base.disjoint_union(Family(ground.descriptor(), std::move(extra)));
}

} // namespace ekr
