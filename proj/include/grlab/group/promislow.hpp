#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "grlab/core.hpp"
#include "grlab/group/backend.hpp"

namespace grlab {

// Promislow (Passman fours) group P = <a, b | a b^2 a^-1 = b^-2, b a^2 b^-1 = a^-2>,
// realized as a crystallographic group of affine isometries of R^3:
//   a = (diag(+1,-1,-1), (1/2, 1/2, 0))
//   b = (diag(-1,+1,-1), (0, 1/2, 1/2))
// An element is (sign part, translation).  Sign parts form the Klein
// four-group {I, A, B, AB}, encoded 0..3 with xor composition.  Translations
// are half-integer vectors stored doubled (so all arithmetic is exact).
//
// The defining relations and torsion-freeness spot checks are exercised by
// the test suite; the pure translations form a normal rank-3 lattice with
// quotient the Klein four-group of sign parts.
//
// Canonical order: (sign index, doubled translation lex).
// Canonical text form: p[<sign>:<tx>:<ty>:<tz>] with halves as k/2.
struct PromislowGroup {
    struct Elt {
        std::uint8_t s = 0;                     // sign part index: 0=I,1=A,2=B,3=AB
        std::array<std::int64_t, 3> t2{0, 0, 0}; // doubled translation
        bool operator==(const Elt& o) const { return s == o.s && t2 == o.t2; }
    };

    std::string name() const { return "promislow"; }
    bool torsion_free() const { return true; }
    bool unique_product_group() const { return false; }
    bool abelian() const { return false; }

    // Sign matrix action: component i of pattern sgn flips iff bit set.
    // 0 = (+,+,+), 1 = (+,-,-), 2 = (-,+,-), 3 = (-,-,+).
    static std::int64_t sign_at(std::uint8_t s, int i) {
        static constexpr std::int8_t table[4][3] = {
            {+1, +1, +1}, {+1, -1, -1}, {-1, +1, -1}, {-1, -1, +1}};
        return table[s][i];
    }

    Elt identity() const { return {}; }
    Elt compose(const Elt& a, const Elt& b) const {
        Elt r;
        r.s = a.s ^ b.s;
        for (int i = 0; i < 3; ++i) r.t2[i] = a.t2[i] + sign_at(a.s, i) * b.t2[i];
        return r;
    }
    Elt inverse(const Elt& a) const {
        Elt r;
        r.s = a.s;
        for (int i = 0; i < 3; ++i) r.t2[i] = -sign_at(a.s, i) * a.t2[i];
        return r;
    }
    int cmp(const Elt& a, const Elt& b) const {
        if (a.s != b.s) return a.s < b.s ? -1 : 1;
        for (int i = 0; i < 3; ++i)
            if (a.t2[i] != b.t2[i]) return a.t2[i] < b.t2[i] ? -1 : 1;
        return 0;
    }
    std::size_t hash(const Elt& a) const {
        std::size_t h = 0x9401 + a.s;
        for (int i = 0; i < 3; ++i) hash_mix(h, (std::size_t)(std::uint64_t)a.t2[i]);
        return h;
    }

    std::vector<Generator<Elt>> generators() const {
        Elt a{1, {1, 1, 0}};
        Elt b{2, {0, 1, 1}};
        return {{'a', a}, {'b', b}};
    }

    bool is_translation(const Elt& e) const { return e.s == 0; }

    static std::string half_str(std::int64_t doubled) {
        if (doubled % 2 == 0) return std::to_string(doubled / 2);
        return std::to_string(doubled) + "/2";
    }
    std::string format(const Elt& e) const {
        static constexpr const char* names[4] = {"1", "a", "b", "ab"};
        if (e == Elt{}) return "e";
        std::string s = "p[";
        s += names[e.s];
        for (int i = 0; i < 3; ++i) s += ":" + half_str(e.t2[i]);
        return s + "]";
    }
};

} // namespace grlab
