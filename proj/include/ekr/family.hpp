#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ekr {

enum class GroundKind { grassmann, symmetric };

/// Identifies a ground set: G_q(n,k) or S_n (k and q are 0 for S_n).
struct GroundDescriptor {
    GroundKind kind = GroundKind::symmetric;
    int n = 0;
    int k = 0;
    int q = 0;

    static GroundDescriptor grassmann(int n, int k, int q) { return {GroundKind::grassmann, n, k, q}; }
    static GroundDescriptor symmetric(int n) { return {GroundKind::symmetric, n, 0, 0}; }

    friend bool operator==(const GroundDescriptor&, const GroundDescriptor&) = default;

    std::string str() const
    {
        if (kind == GroundKind::symmetric) return "symmetric " + std::to_string(n);
        return "grassmann " + std::to_string(n) + " " + std::to_string(k) + " " + std::to_string(q);
    }
};

/// A family of ground elements, stored as sorted unique indices into the ground's enumeration.
class Family {
public:
    Family() = default;

    Family(GroundDescriptor ground, std::vector<std::size_t> members) : ground_(ground), members_(std::move(members))
    {
        std::sort(members_.begin(), members_.end());
        if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
            throw std::invalid_argument("Family: duplicate member index");
    }

    const GroundDescriptor& ground() const { return ground_; }
    const std::vector<std::size_t>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(std::size_t idx) const { return std::binary_search(members_.begin(), members_.end(), idx); }

    /// Disjoint union; throws if the families overlap or live on different grounds.
    Family disjoint_union(const Family& other) const
    {
        if (!(ground_ == other.ground_)) throw std::invalid_argument("Family: ground mismatch");
        std::vector<std::size_t> all = members_;
        all.insert(all.end(), other.members_.begin(), other.members_.end());
        return Family(ground_, std::move(all));
    }

    friend bool operator==(const Family&, const Family&) = default;

private:
    GroundDescriptor ground_;
    std::vector<std::size_t> members_;
};

inline void require_ground(const GroundDescriptor& expected, const Family& f)
{
    if (!(f.ground() == expected))
        throw std::invalid_argument("family ground '" + f.ground().str() + "' does not match '" + expected.str() + "'");
}

/// Ground descriptor matches and every member index is inside the ground.
template <class Ground>
void require_family_of(const Ground& ground, const Family& f)
{
    require_ground(ground.descriptor(), f);
    if (!f.empty() && f.members().back() >= ground.size())
        throw std::out_of_range("family member index " + std::to_string(f.members().back()) + " outside a ground of size " +
                                std::to_string(ground.size()));
}

} // namespace ekr
