#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "grlab/group/backend.hpp"

namespace grlab {

// Klein bottle group <a, b | b a b^-1 = a^-1>.  Normal form: a^m b^n,
// stored as (m, n).  Product rule: b^n a = a^((-1)^n) b^n, so
//   (m1,n1)*(m2,n2) = (m1 + (-1)^n1 * m2, n1 + n2).
// <a> is normal with quotient Z (the b-exponent).  Canonical order:
// (|m|+|n|, m, n) lexicographic.
struct KleinBottleGroup {
    using Elt = std::array<std::int64_t, 2>;

    std::string name() const { return "klein"; }
    bool torsion_free() const { return true; }
    bool unique_product_group() const { return true; }
    bool abelian() const { return false; }

    Elt identity() const { return {0, 0}; }
    Elt compose(const Elt& a, const Elt& b) const {
        std::int64_t sign = (a[1] % 2 == 0) ? 1 : -1;
        return {a[0] + sign * b[0], a[1] + b[1]};
    }
    Elt inverse(const Elt& a) const {
        std::int64_t sign = (a[1] % 2 == 0) ? 1 : -1;
        return {-sign * a[0], -a[1]};
    }
    int cmp(const Elt& a, const Elt& b) const {
        auto la = std::llabs(a[0]) + std::llabs(a[1]);
        auto lb = std::llabs(b[0]) + std::llabs(b[1]);
        if (la != lb) return la < lb ? -1 : 1;
        for (int i = 0; i < 2; ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    std::size_t hash(const Elt& a) const {
        std::size_t h = 0x4b11;
        hash_mix(h, (std::size_t)(std::uint64_t)a[0]);
        hash_mix(h, (std::size_t)(std::uint64_t)a[1]);
        return h;
    }

    std::vector<Generator<Elt>> generators() const {
        return {{'a', Elt{1, 0}}, {'b', Elt{0, 1}}};
    }

    std::string format(const Elt& a) const {
        std::string s;
        if (a[0] != 0) {
            s += 'a';
            if (a[0] != 1) s += "^" + std::to_string(a[0]);
        }
        if (a[1] != 0) {
            if (!s.empty()) s += "*";
            s += 'b';
            if (a[1] != 1) s += "^" + std::to_string(a[1]);
        }
        return s.empty() ? "e" : s;
    }
};

} // namespace grlab
