#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "grlab/group/backend.hpp"

namespace grlab {

// Free abelian group Z^n (1 <= n <= 3), written multiplicatively with
// generator letters t (n=1) and u, v, w (n>=2).  Normal form: exponent
// vector.  Canonical order: lex on the exponent vector.
struct ZnGroup {
    static constexpr int kMaxRank = 3;
    using Elt = std::array<std::int64_t, kMaxRank>;

    int n;

    explicit ZnGroup(int rank) : n(rank) {
        if (rank < 1 || rank > kMaxRank)
            throw std::invalid_argument("ZnGroup: rank must be in 1..3");
    }

    std::string name() const { return "z" + std::to_string(n); }
    bool torsion_free() const { return true; }
    bool unique_product_group() const { return true; }
    bool abelian() const { return true; }

    Elt identity() const { return Elt{0, 0, 0}; }
    Elt compose(const Elt& a, const Elt& b) const {
        Elt r{};
        for (int i = 0; i < n; ++i) r[i] = a[i] + b[i];
        return r;
    }
    Elt inverse(const Elt& a) const {
        Elt r{};
        for (int i = 0; i < n; ++i) r[i] = -a[i];
        return r;
    }
    int cmp(const Elt& a, const Elt& b) const {
        for (int i = 0; i < n; ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }
    std::size_t hash(const Elt& a) const {
        std::size_t h = 0x5a17;
        for (int i = 0; i < n; ++i) hash_mix(h, (std::size_t)(std::uint64_t)a[i]);
        return h;
    }

    std::vector<Generator<Elt>> generators() const {
        static constexpr char rank1[] = {'t'};
        static constexpr char rankn[] = {'u', 'v', 'w'};
        std::vector<Generator<Elt>> gens;
        for (int i = 0; i < n; ++i) {
            Elt e{};
            e[i] = 1;
            gens.push_back({n == 1 ? rank1[0] : rankn[i], e});
        }
        return gens;
    }

    std::string format(const Elt& a) const {
        std::string s;
        auto gens = generators();
        for (int i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += gens[(std::size_t)i].letter;
            if (a[i] != 1) s += "^" + std::to_string(a[i]);
        }
        return s.empty() ? "e" : s;
    }

    std::string format_tuple(const Elt& a) const {
        std::string s = "(";
        for (int i = 0; i < n; ++i) {
            if (i) s += ",";
            s += std::to_string(a[i]);
        }
        return s + ")";
    }
};

} // namespace grlab
