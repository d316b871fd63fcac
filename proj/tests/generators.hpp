#pragma once

// Small random generators for property tests.

#include <ekr/family.hpp>
#include <ekr/permgroup.hpp>
#include <ekr/vecspace.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline ekr::Permutation permutation(Rng& rng, int n)
{
    std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), std::uint8_t{0});
    std::shuffle(img.begin(), img.end(), rng);
    return ekr::Permutation(img);
}

/// Random spanning set of up to `rows` vectors in F_q^n.
inline std::vector<std::vector<std::uint8_t>> rows(Rng& rng, int n, int q, int count)
{
    std::vector<std::vector<std::uint8_t>> out(static_cast<std::size_t>(count), std::vector<std::uint8_t>(static_cast<std::size_t>(n)));
    for (auto& r : out)
        for (auto& x : r) x = static_cast<std::uint8_t>(uniform(rng, 0, q - 1));
    return out;
}

inline ekr::Subspace subspace(Rng& rng, int n, int q, int max_rows)
{
    return ekr::Subspace(n, q, rows(rng, n, q, uniform(rng, 0, max_rows)));
}

inline ekr::Family family(Rng& rng, const ekr::GroundDescriptor& d, std::size_t ground_size, std::size_t m)
{
    std::vector<std::size_t> all(ground_size);
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(m);
    return ekr::Family(d, all);
}

template <class Ground>
ekr::Family family(Rng& rng, const Ground& g, std::size_t lo, std::size_t hi)
{
    const auto m = static_cast<std::size_t>(uniform(rng, static_cast<int>(lo), static_cast<int>(std::min(hi, g.size()))));
    return family(rng, g.descriptor(), g.size(), m);
}

/// Random partition of n by random composition, sorted.
inline ekr::Partition partition(Rng& rng, int n)
{
    std::vector<int> parts;
    int left = n;
    while (left > 0) {
        const int p = uniform(rng, 1, left);
        parts.push_back(p);
        left -= p;
    }
    return ekr::Partition::from_unsorted(parts);
}

} // namespace gen
