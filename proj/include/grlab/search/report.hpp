#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grlab {

enum class SearchKind { unit, zero_divisor, idempotent, nilpotent };

inline const char* kind_name(SearchKind k) {
    switch (k) {
        case SearchKind::unit: return "unit";
        case SearchKind::zero_divisor: return "zero-divisor";
        case SearchKind::idempotent: return "idempotent";
        case SearchKind::nilpotent: return "nilpotent";
    }
    return "?";
}

struct SearchLimits {
    std::size_t max_window = 28;       // candidate support indices live in one word
    std::size_t max_partner = 4096;
    std::uint64_t max_candidates = 1ULL << 40;
    std::size_t max_witnesses = 64;    // stored; all witnesses are still counted
    double time_budget_s = 0;          // 0 = unlimited
    int jobs = 1;
    bool force_generic = false;        // disable the F2 bitset fast path
};

struct WitnessRecord {
    std::string x, y, detail;
    bool operator==(const WitnessRecord& o) const {
        return x == o.x && y == o.y && detail == o.detail;
    }
};

struct SearchCounts {
    std::uint64_t candidates = 0;     // coefficient assignments covered
    std::uint64_t support_sets = 0;
    std::uint64_t sets_dismissed = 0; // dismissed whole at the pattern level
    std::uint64_t residual_solves = 0;
};

// Outcome of one bounded-support search.  `exhausted` refers to the declared
// pair of windows: every candidate x with Supp(x) in the window was decided
// against every partner y supported in the partner window.
struct SearchReport {
    std::string model;
    std::string kind;
    std::string window_desc, partner_desc;
    std::size_t window_size = 0, partner_size = 0;
    std::uint32_t p = 0; // 0 for exact coefficient rings
    bool require_non_homogeneous = false;
    bool central_only = false;
    bool up_to_scalar = false;

    bool exhausted = false;
    std::vector<WitnessRecord> witnesses;
    std::uint64_t witnesses_found = 0;
    std::uint64_t one_sided_hits = 0;
    SearchCounts counts;
    std::vector<std::string> notes;

    std::string engine;        // excluded from signatures
    double wall_seconds = 0;   // excluded from signatures

    // Canonical comparable form: everything except timing/engine identity.
    std::string signature() const {
        std::string s;
        s += model + "|" + kind + "|" + window_desc + "|" + partner_desc + "|";
        s += std::to_string(window_size) + "," + std::to_string(partner_size) + ",p" +
             std::to_string(p) + "|";
        s += std::string(require_non_homogeneous ? "nh" : "-") + (central_only ? "c" : "-") +
             (up_to_scalar ? "s" : "-") + (exhausted ? "X" : "-") + "|";
        s += "w" + std::to_string(witnesses_found) + ",os" + std::to_string(one_sided_hits) + "|";
        s += "c" + std::to_string(counts.candidates) + "," + std::to_string(counts.support_sets) +
             "," + std::to_string(counts.sets_dismissed) + "," +
             std::to_string(counts.residual_solves) + "\n";
        for (const auto& w : witnesses) s += "  x=" + w.x + " ; y=" + w.y + " ; " + w.detail + "\n";
        for (const auto& n : notes) s += "  note: " + n + "\n";
        return s;
    }
};

} // namespace grlab
