#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "grlab/core.hpp"

namespace grlab {

// A named generator of a backend.  Balls and word metrics are always taken
// with respect to the symmetric closure of the backend's generator list.
template <class Elt>
struct Generator {
    char letter;
    Elt g;
};

template <class G>
struct BackendHash {
    const G* backend;
    std::size_t operator()(const typename G::Elt& e) const { return backend->hash(e); }
};

template <class G>
struct BackendEq {
    const G* backend;
    bool operator()(const typename G::Elt& a, const typename G::Elt& b) const { return a == b; }
};

template <class G>
struct BackendLess {
    const G* backend;
    bool operator()(const typename G::Elt& a, const typename G::Elt& b) const {
        return backend->cmp(a, b) < 0;
    }
};

template <class G>
using EltSet = std::unordered_set<typename G::Elt, BackendHash<G>, BackendEq<G>>;

template <class G>
EltSet<G> make_elt_set(const G& g) {
    return EltSet<G>(16, BackendHash<G>{&g}, BackendEq<G>{&g});
}

template <class G>
typename G::Elt conjugated(const G& g, const typename G::Elt& x, const typename G::Elt& s) {
    return g.compose(g.compose(g.inverse(s), x), s);
}

template <class G>
typename G::Elt power(const G& g, typename G::Elt base, long long k) {
    if (k < 0) {
        base = g.inverse(base);
        k = -k;
    }
    typename G::Elt acc = g.identity();
    while (k > 0) {
        if (k & 1) acc = g.compose(acc, base);
        base = g.compose(base, base);
        k >>= 1;
    }
    return acc;
}

// All elements of word length <= r with respect to the backend's symmetric
// generator set, ordered by (word length, canonical order).  Deterministic
// and monotone in r.
template <class G>
std::vector<typename G::Elt> ball(const G& g, int r) {
    using Elt = typename G::Elt;
    if (r < 0) throw std::invalid_argument("ball: negative radius");
    std::vector<Elt> gens;
    for (const auto& gen : g.generators()) {
        gens.push_back(gen.g);
        Elt inv = g.inverse(gen.g);
        if (!(inv == gen.g)) gens.push_back(inv);
    }
    auto seen = make_elt_set(g);
    std::vector<Elt> out;
    std::vector<Elt> frontier{g.identity()};
    seen.insert(g.identity());
    out.push_back(g.identity());
    for (int depth = 1; depth <= r; ++depth) {
        std::vector<Elt> next;
        for (const auto& e : frontier)
            for (const auto& s : gens) {
                Elt f = g.compose(e, s);
                if (seen.insert(f).second) next.push_back(f);
            }
        std::sort(next.begin(), next.end(), BackendLess<G>{&g});
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

// Word length of x (exact BFS distance); used only at desk scale.
template <class G>
std::optional<int> word_length_within(const G& g, const typename G::Elt& x, int rmax) {
    if (x == g.identity()) return 0;
    auto seen = make_elt_set(g);
    std::vector<typename G::Elt> frontier{g.identity()};
    seen.insert(g.identity());
    std::vector<typename G::Elt> gens;
    for (const auto& gen : g.generators()) {
        gens.push_back(gen.g);
        auto inv = g.inverse(gen.g);
        if (!(inv == gen.g)) gens.push_back(inv);
    }
    for (int depth = 1; depth <= rmax; ++depth) {
        std::vector<typename G::Elt> next;
        for (const auto& e : frontier)
            for (const auto& s : gens) {
                auto f = g.compose(e, s);
                if (seen.insert(f).second) {
                    if (f == x) return depth;
                    next.push_back(f);
                }
            }
        frontier = std::move(next);
    }
    return std::nullopt;
}

template <class G>
std::optional<typename G::Elt> generator_by_letter(const G& g, char c) {
    for (const auto& gen : g.generators())
        if (gen.letter == c) return gen.g;
    return std::nullopt;
}

} // namespace grlab
