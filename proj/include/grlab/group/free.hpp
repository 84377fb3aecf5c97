#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grlab/group/backend.hpp"

namespace grlab {

// Free group of rank k (letters a, b, c, d).  Normal form: freely reduced
// word, stored as signed letter codes (+1 = a, -1 = a^-1, +2 = b, ...).
// Canonical order: shortlex with a < a^-1 < b < b^-1 < ...
struct FreeGroup {
    static constexpr int kMaxRank = 4;
    using Elt = std::vector<std::int8_t>;

    int rank;

    explicit FreeGroup(int k) : rank(k) {
        if (k < 1 || k > kMaxRank)
            throw std::invalid_argument("FreeGroup: rank must be in 1..4");
    }

    std::string name() const { return "f" + std::to_string(rank); }
    bool torsion_free() const { return true; }
    bool unique_product_group() const { return true; }
    bool abelian() const { return rank == 1; }

    Elt identity() const { return {}; }

    Elt compose(const Elt& a, const Elt& b) const {
        Elt r = a;
        for (std::int8_t c : b) {
            if (!r.empty() && r.back() == -c)
                r.pop_back();
            else
                r.push_back(c);
        }
        return r;
    }
    Elt inverse(const Elt& a) const {
        Elt r;
        r.reserve(a.size());
        for (auto it = a.rbegin(); it != a.rend(); ++it) r.push_back((std::int8_t)-*it);
        return r;
    }

    static int letter_rank(std::int8_t c) {
        int base = (std::abs((int)c) - 1) * 2;
        return c < 0 ? base + 1 : base;
    }

    int cmp(const Elt& a, const Elt& b) const {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]) ? -1 : 1;
        return 0;
    }
    std::size_t hash(const Elt& a) const {
        std::size_t h = 0xf4ee;
        for (std::int8_t c : a) hash_mix(h, (std::size_t)(std::uint8_t)c);
        return h;
    }

    std::vector<Generator<Elt>> generators() const {
        static constexpr char letters[] = {'a', 'b', 'c', 'd'};
        std::vector<Generator<Elt>> gens;
        for (int i = 0; i < rank; ++i) gens.push_back({letters[i], Elt{(std::int8_t)(i + 1)}});
        return gens;
    }

    std::string format(const Elt& a) const {
        if (a.empty()) return "e";
        static constexpr char letters[] = {'a', 'b', 'c', 'd'};
        std::string s;
        std::size_t i = 0;
        while (i < a.size()) {
            std::size_t j = i;
            while (j < a.size() && a[j] == a[i]) ++j;
            long long exp = (long long)(j - i) * (a[i] < 0 ? -1 : 1);
            if (!s.empty()) s += "*";
            s += letters[std::abs((int)a[i]) - 1];
            if (exp != 1) s += "^" + std::to_string(exp);
            i = j;
        }
        return s;
    }

    // g = conj * w * conj^-1 with w cyclically reduced.
    void cyclic_reduce(const Elt& g, Elt& w, Elt& conj) const {
        Elt cur = g;
        conj.clear();
        while (cur.size() >= 2 && cur.front() == -cur.back()) {
            conj.push_back(cur.front());
            cur.erase(cur.begin());
            cur.pop_back();
        }
        w = cur;
    }
};

} // namespace grlab
