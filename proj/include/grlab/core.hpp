#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grlab {

// Raised when two values from incompatible backends/models are combined.
struct mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a subgroup/quotient descriptor is not supported for a backend.
// The contract is: an explicit error, never a wrong answer.
struct unsupported_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a search window exceeds the configured cap.
struct window_cap_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when an internal mathematical invariant that is expected to hold
// unconditionally fails (e.g. a reported witness does not re-verify, or a
// two-unique-products guarantee fails on a UP backend).  CLI exit code 2.
struct theorem_alarm : std::logic_error {
    using std::logic_error::logic_error;
};

// Expression/word parse failure with source position (1-based).
struct parse_error : std::runtime_error {
    int line;
    int column;
    parse_error(const std::string& msg, int ln, int col)
        : std::runtime_error(msg + " (line " + std::to_string(ln) + ", column " +
                             std::to_string(col) + ")"),
          line(ln), column(col) {}
};

inline void hash_mix(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

// splitmix64; used to derive per-attempt RNG streams from a user seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace grlab
