#pragma once

#include <cstdlib>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ekr {

/// A computation would exceed a configured enumeration or table cap.
class size_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Field arithmetic requested for a q that is not prime.
class unsupported_field_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Internal cross-check failed (e.g. dual distribution does not reconstruct a).
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Resource caps. Defaults keep every desk-scale computation in memory and time.
struct Caps {
    std::uint64_t grassmann_ground = 200000; // max [n k]_q materialised
    std::uint64_t pair_table = 6000;         // max ground size with a pairwise table
    int symmetric_n = 8;                     // max n for S_n enumeration / conjugacy tables
    int character_n = 10;                    // max n for character computations
    int projection_n = 6;                    // max n for the U_1 projection
    std::uint64_t search_budget = 100000000; // max C(|ground|, M) for exhaustive search

    /// Overrides from a "key=value,key=value" string (the EKR_CAPS format).
    static Caps parse(const std::string& spec, Caps base)
    {
        std::size_t pos = 0;
        while (pos < spec.size()) {
            auto end = spec.find(',', pos);
            if (end == std::string::npos) end = spec.size();
            const auto item = spec.substr(pos, end - pos);
            pos = end + 1;
            if (item.empty()) continue;
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("caps: expected key=value, got '" + item + "'");
            const auto key = item.substr(0, eq);
            const auto val = std::stoull(item.substr(eq + 1));
            if (key == "grassmann") base.grassmann_ground = val;
            else if (key == "pair_table") base.pair_table = val;
            else if (key == "symmetric") base.symmetric_n = static_cast<int>(val);
            else if (key == "characters") base.character_n = static_cast<int>(val);
            else if (key == "projection") base.projection_n = static_cast<int>(val);
            else if (key == "budget") base.search_budget = val;
            else throw std::invalid_argument("caps: unknown key '" + key + "'");
        }
        return base;
    }

    static Caps parse(const std::string& spec) { return parse(spec, Caps{}); }

    static Caps from_env()
    {
        const char* env = std::getenv("EKR_CAPS");
        return env ? parse(env) : Caps{};
    }
};

} // namespace ekr
