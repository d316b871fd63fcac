#pragma once

/**
 * @file familyio.hpp
 * @brief Text format for families.
 *
 *     grassmann n k q            symmetric n
 *     <basis rows>               <one-line permutation per line>
 *     <blank line>               ...
 *     <basis rows> ...
 *
 * Either body may be replaced by a single line "indices: i1 i2 ...";
 * families in G_q(n,0) are always written that way.
 */

#include "family.hpp"
#include "permgroup.hpp"
#include "vecspace.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace ekr {

inline GroundDescriptor parse_ground(const std::string& text)
{
    std::istringstream is(text);
    std::string kind;
    is >> kind;
    if (kind == "grassmann") {
        int n = -1, k = -1, q = -1;
        if (!(is >> n >> k >> q) || n < 0 || k < 0 || k > n || q < 2)
            throw std::invalid_argument("bad ground '" + text + "': expected 'grassmann n k q'");
        return GroundDescriptor::grassmann(n, k, q);
    }
    if (kind == "symmetric") {
        int n = -1;
        if (!(is >> n) || n < 1) throw std::invalid_argument("bad ground '" + text + "': expected 'symmetric n'");
        return GroundDescriptor::symmetric(n);
    }
    throw std::invalid_argument("bad ground '" + text + "': expected 'grassmann n k q' or 'symmetric n'");
}

struct FamilyFile {
    GroundDescriptor ground;
    std::optional<std::vector<std::size_t>> indices;
    std::vector<Subspace> subspaces;
    std::vector<Permutation> permutations;
};

namespace detail {

inline std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace detail

inline FamilyFile read_family(std::istream& in)
{
    FamilyFile out;
    std::string line;
    bool have_header = false;
    while (!have_header && std::getline(in, line)) {
        line = detail::trim(line);
        if (line.empty() || line[0] == '#') continue;
        out.ground = parse_ground(line);
        have_header = true;
    }
    if (!have_header) throw std::invalid_argument("family file: missing ground header");

    std::vector<std::vector<std::uint8_t>> block;
    auto flush = [&] {
        if (block.empty()) return;
        Subspace s(out.ground.n, out.ground.q, block);
        if (s.dim() != out.ground.k) throw std::invalid_argument("family file: subspace of the wrong dimension");
        out.subspaces.push_back(std::move(s));
        block.clear();
    };
    while (std::getline(in, line)) {
        line = detail::trim(line);
        if (!line.empty() && line[0] == '#') continue;
        if (line.rfind("indices:", 0) == 0) {
            std::istringstream is(line.substr(8));
            std::vector<std::size_t> idx;
            long long v = 0;
            while (is >> v) {
                if (v < 0) throw std::invalid_argument("family file: negative index");
                idx.push_back(static_cast<std::size_t>(v));
            }
            if (!is.eof()) throw std::invalid_argument("family file: bad index list");
            out.indices = std::move(idx);
            continue;
        }
        if (out.ground.kind == GroundKind::symmetric) {
            if (line.empty()) continue;
            auto p = parse_permutation(line);
            if (p.n() != out.ground.n) throw std::invalid_argument("family file: permutation of the wrong size");
            out.permutations.push_back(std::move(p));
        } else {
            if (line.empty()) flush();
            else block.push_back(parse_fq_row(line, out.ground.n, out.ground.q));
        }
    }
    flush();
    if (out.indices && (!out.subspaces.empty() || !out.permutations.empty()))
        throw std::invalid_argument("family file: mixes an index list with explicit members");
    return out;
}

inline Family resolve_family(const FamilyFile& file, const GrassmannGround& ground)
{
    if (!(file.ground == ground.descriptor())) throw std::invalid_argument("family file is for " + file.ground.str());
    std::vector<std::size_t> idx;
    if (file.indices) idx = *file.indices;
    for (const auto& s : file.subspaces) {
        const auto i = ground.index_of(s);
        if (!i) throw std::invalid_argument("family file: subspace not in the ground set");
        idx.push_back(*i);
    }
    Family f(ground.descriptor(), std::move(idx));
    require_family_of(ground, f);
    return f;
}

inline Family resolve_family(const FamilyFile& file, const SymmetricGround& ground)
{
    if (!(file.ground == ground.descriptor())) throw std::invalid_argument("family file is for " + file.ground.str());
    std::vector<std::size_t> idx;
    if (file.indices) idx = *file.indices;
    for (const auto& p : file.permutations) idx.push_back(ground.index_of(p));
    Family f(ground.descriptor(), std::move(idx));
    require_family_of(ground, f);
    return f;
}

inline void write_indices(std::ostream& os, const Family& f)
{
    os << f.ground().str() << "\nindices:";
    for (auto i : f.members()) os << ' ' << i;
    os << '\n';
}

inline void write_family(std::ostream& os, const GrassmannGround& ground, const Family& f)
{
    require_family_of(ground, f);
    if (ground.k() == 0) return write_indices(os, f); // the zero subspace has no basis rows
    os << f.ground().str() << '\n';
    bool first = true;
    for (auto i : f.members()) {
        if (!first) os << '\n';
        first = false;
        write_subspace(os, ground[i]);
    }
}

inline void write_family(std::ostream& os, const SymmetricGround& ground, const Family& f)
{
    require_family_of(ground, f);
    os << f.ground().str() << '\n';
    for (auto i : f.members()) os << ground[i].str() << '\n';
}

} // namespace ekr
