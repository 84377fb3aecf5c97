#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grlab/group/backend.hpp"

namespace grlab {

// Cyclic group C_n (torsion control; not torsion-free).  Normal form:
// residue in [0, n).  Generator letter t.
struct CyclicGroup {
    using Elt = std::uint32_t;

    std::uint32_t n;

    explicit CyclicGroup(std::uint32_t order) : n(order) {
        if (order < 1) throw std::invalid_argument("CyclicGroup: order must be >= 1");
    }

    std::string name() const { return "c" + std::to_string(n); }
    bool torsion_free() const { return n == 1; }
    bool unique_product_group() const { return n == 1; }
    bool abelian() const { return true; }

    Elt identity() const { return 0; }
    Elt compose(Elt a, Elt b) const { return (a + b) % n; }
    Elt inverse(Elt a) const { return a == 0 ? 0 : n - a; }
    int cmp(Elt a, Elt b) const { return a < b ? -1 : (a > b ? 1 : 0); }
    std::size_t hash(Elt a) const { return a * 0x9e3779b97f4a7c15ULL >> 16; }

    std::vector<Generator<Elt>> generators() const { return {{'t', Elt{1 % n}}}; }

    std::string format(Elt a) const {
        if (a == 0) return "e";
        if (a == 1) return "t";
        return "t^" + std::to_string(a);
    }
};

// Klein four-group C2 x C2, the grading group of the quaternion model.
// Elements e, i, j, k encoded 0..3 with xor composition.
struct KleinFourGroup {
    using Elt = std::uint8_t;

    std::string name() const { return "v4"; }
    bool torsion_free() const { return false; }
    bool unique_product_group() const { return false; }
    bool abelian() const { return true; }

    Elt identity() const { return 0; }
    Elt compose(Elt a, Elt b) const { return a ^ b; }
    Elt inverse(Elt a) const { return a; }
    int cmp(Elt a, Elt b) const { return a < b ? -1 : (a > b ? 1 : 0); }
    std::size_t hash(Elt a) const { return 0xabcd01 + a; }

    std::vector<Generator<Elt>> generators() const { return {{'i', Elt{1}}, {'j', Elt{2}}}; }

    std::string format(Elt a) const {
        static constexpr const char* names[4] = {"e", "i", "j", "k"};
        return names[a & 3];
    }
};

} // namespace grlab
