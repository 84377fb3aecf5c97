#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "grlab/group/backend.hpp"

namespace grlab {

// Discrete Heisenberg group with generators x, y and central z = x^-1 y^-1 x y.
// Normal form: x^a y^b z^c, stored as the triple (a, b, c).  The defining
// relation in this convention is y x = x y z^-1, giving the product rule
//   (a1,b1,c1)*(a2,b2,c2) = (a1+a2, b1+b2, c1+c2 - b1*a2).
// Word metric uses generators {x, y} only.  Canonical order:
// (|a|+|b|+|c|, a, b, c) lexicographic.
struct HeisenbergGroup {
    using Elt = std::array<std::int64_t, 3>;

    std::string name() const { return "heisenberg"; }
    bool torsion_free() const { return true; }
    bool unique_product_group() const { return true; }
    bool abelian() const { return false; }

    Elt identity() const { return {0, 0, 0}; }
    Elt compose(const Elt& a, const Elt& b) const {
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2] - a[1] * b[0]};
    }
    Elt inverse(const Elt& a) const { return {-a[0], -a[1], -a[2] - a[0] * a[1]}; }

    static std::int64_t spelling_length(const Elt& a) {
        return std::llabs(a[0]) + std::llabs(a[1]) + std::llabs(a[2]);
    }
    int cmp(const Elt& a, const Elt& b) const {
        auto la = spelling_length(a), lb = spelling_length(b);
        if (la != lb) return la < lb ? -1 : 1;
        for (int i = 0; i < 3; ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    std::size_t hash(const Elt& a) const {
        std::size_t h = 0x4e15;
        for (int i = 0; i < 3; ++i) hash_mix(h, (std::size_t)(std::uint64_t)a[i]);
        return h;
    }

    std::vector<Generator<Elt>> generators() const {
        return {{'x', Elt{1, 0, 0}}, {'y', Elt{0, 1, 0}}};
    }
    // z is not a word-metric generator but is a legal letter in words.
    Elt central_z() const { return {0, 0, 1}; }

    bool is_central(const Elt& a) const { return a[0] == 0 && a[1] == 0; }

    std::string format(const Elt& a) const {
        std::string s;
        const char letters[] = {'x', 'y', 'z'};
        for (int i = 0; i < 3; ++i) {
            if (a[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += letters[i];
            if (a[i] != 1) s += "^" + std::to_string(a[i]);
        }
        return s.empty() ? "e" : s;
    }
};

} // namespace grlab
