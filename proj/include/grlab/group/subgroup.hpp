#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "grlab/core.hpp"
#include "grlab/group/backend.hpp"
#include "grlab/group/cyclic.hpp"
#include "grlab/group/free.hpp"
#include "grlab/group/heisenberg.hpp"
#include "grlab/group/klein_bottle.hpp"
#include "grlab/group/lattice.hpp"
#include "grlab/group/promislow.hpp"
#include "grlab/group/zn.hpp"

namespace grlab {

// ---- exact membership in a cyclic subgroup <g>, per backend ----

inline bool cyclic_contains(const ZnGroup& G, const ZnGroup::Elt& g, const ZnGroup::Elt& h) {
    if (g == G.identity()) return h == G.identity();
    int i0 = 0;
    while (g[(std::size_t)i0] == 0) ++i0;
    if (h[(std::size_t)i0] % g[(std::size_t)i0] != 0) return false;
    std::int64_t k = h[(std::size_t)i0] / g[(std::size_t)i0];
    for (int i = 0; i < G.n; ++i)
        if (h[(std::size_t)i] != k * g[(std::size_t)i]) return false;
    return true;
}

inline bool cyclic_contains(const FreeGroup& G, const FreeGroup::Elt& g, const FreeGroup::Elt& h) {
    if (g.empty()) return h.empty();
    // g = c w c^-1, w cyclically reduced, so |g^k| = 2|c| + |k||w|.
    FreeGroup::Elt w, c;
    G.cyclic_reduce(g, w, c);
    FreeGroup::Elt cur = G.identity();
    if (h == cur) return true;
    FreeGroup::Elt gi = G.inverse(g);
    FreeGroup::Elt pos = G.identity(), neg = G.identity();
    while (true) {
        pos = G.compose(pos, g);
        neg = G.compose(neg, gi);
        if (pos == h || neg == h) return true;
        if (pos.size() > h.size() && neg.size() > h.size()) return false;
    }
}

inline HeisenbergGroup::Elt heisenberg_power(const HeisenbergGroup::Elt& g, std::int64_t k) {
    // (a,b,c)^k = (ka, kb, kc - k(k-1)/2 * a*b), valid for all integer k.
    return {k * g[0], k * g[1], k * g[2] - (k * (k - 1) / 2) * g[0] * g[1]};
}

inline bool cyclic_contains(const HeisenbergGroup& G, const HeisenbergGroup::Elt& g,
                            const HeisenbergGroup::Elt& h) {
    if (g == G.identity()) return h == G.identity();
    if (g[0] != 0 || g[1] != 0) {
        int i0 = g[0] != 0 ? 0 : 1;
        if (h[(std::size_t)i0] % g[(std::size_t)i0] != 0) return false;
        std::int64_t k = h[(std::size_t)i0] / g[(std::size_t)i0];
        return heisenberg_power(g, k) == h;
    }
    // central g = z^c
    if (h[0] != 0 || h[1] != 0) return false;
    return h[2] % g[2] == 0;
}

inline bool cyclic_contains(const KleinBottleGroup& G, const KleinBottleGroup::Elt& g,
                            const KleinBottleGroup::Elt& h) {
    if (g == G.identity()) return h == G.identity();
    if (g[1] != 0) {
        if (h[1] % g[1] != 0) return false;
        std::int64_t k = h[1] / g[1];
        return power(G, g, k) == h;
    }
    return h[1] == 0 && h[0] % g[0] == 0;
}

inline bool cyclic_contains(const PromislowGroup& G, const PromislowGroup::Elt& g,
                            const PromislowGroup::Elt& h) {
    if (g == G.identity()) return h == G.identity();
    PromislowGroup::Elt tau = G.compose(g, g); // a pure translation, nonzero within P
    auto solve_j = [&](const std::array<std::int64_t, 3>& target,
                       std::optional<std::int64_t>& j) {
        int i0 = -1;
        for (int i = 0; i < 3; ++i)
            if (tau.t2[(std::size_t)i] != 0) { i0 = i; break; }
        if (i0 < 0) { j = std::nullopt; return; }
        if (target[(std::size_t)i0] % tau.t2[(std::size_t)i0] != 0) { j = std::nullopt; return; }
        std::int64_t cand = target[(std::size_t)i0] / tau.t2[(std::size_t)i0];
        for (int i = 0; i < 3; ++i)
            if (target[(std::size_t)i] != cand * tau.t2[(std::size_t)i]) { j = std::nullopt; return; }
        j = cand;
    };
    if (h.s == 0) { // candidate even power g^(2j)
        std::optional<std::int64_t> j;
        solve_j(h.t2, j);
        return j.has_value();
    }
    if (h.s != g.s) return false;
    // candidate odd power: g^(2j+1) = (I, j*tau) * g
    PromislowGroup::Elt u = G.compose(h, G.inverse(g));
    if (u.s != 0) return false;
    std::optional<std::int64_t> j;
    solve_j(u.t2, j);
    return j.has_value();
}

inline bool cyclic_contains(const CyclicGroup& G, CyclicGroup::Elt g, CyclicGroup::Elt h) {
    CyclicGroup::Elt cur = 0;
    for (std::uint32_t k = 0; k < G.n; ++k) {
        if (cur == h) return true;
        cur = G.compose(cur, g);
    }
    return false;
}

inline bool cyclic_contains(const KleinFourGroup&, KleinFourGroup::Elt g, KleinFourGroup::Elt h) {
    return h == 0 || h == g;
}

// ---- subgroup descriptors ----

// A subgroup of a backend, from the supported closed list of descriptors.
// Membership is always exact; unsupported combinations throw rather than
// guess.  A coset-representative oracle is available for the descriptors
// marked below and is required by quotient gradations.
template <class G>
struct Subgroup {
    enum class Kind {
        whole,
        trivial,
        cyclic,  // <g>
        lattice, // Zn only; also used for cyclic subgroups of Zn
        center,
        named,   // "a" (Klein bottle <a>), "translations" (Promislow lattice)
    };

    Kind kind = Kind::whole;
    typename G::Elt gen{};
    ZLattice lat;
    std::string named_id;

    static Subgroup whole() { return Subgroup{Kind::whole, {}, {}, {}}; }
    static Subgroup trivial() { return Subgroup{Kind::trivial, {}, {}, {}}; }

    static Subgroup cyclic(const G& g, const typename G::Elt& generator) {
        if constexpr (std::is_same_v<G, ZnGroup>) {
            // promote to a rank-<=1 lattice so the coset oracle is available
            Subgroup s;
            s.kind = Kind::lattice;
            s.gen = generator;
            s.lat = ZLattice::from_generators(g.n, {generator});
            return s;
        } else {
            Subgroup s;
            s.kind = Kind::cyclic;
            s.gen = generator;
            (void)g;
            return s;
        }
    }

    static Subgroup lattice(const G& g, const std::vector<std::array<std::int64_t, 3>>& gens) {
        if constexpr (std::is_same_v<G, ZnGroup>) {
            Subgroup s;
            s.kind = Kind::lattice;
            s.lat = ZLattice::from_generators(g.n, gens);
            return s;
        } else {
            throw unsupported_error("lattice subgroups exist only for z^n backends");
        }
    }

    static Subgroup center() {
        Subgroup s;
        s.kind = Kind::center;
        return s;
    }

    static Subgroup named(const std::string& id) {
        Subgroup s;
        s.kind = Kind::named;
        s.named_id = id;
        return s;
    }

    bool contains(const G& g, const typename G::Elt& x) const {
        switch (kind) {
            case Kind::whole: return true;
            case Kind::trivial: return x == g.identity();
            case Kind::cyclic: return cyclic_contains(g, gen, x);
            case Kind::lattice:
                if constexpr (std::is_same_v<G, ZnGroup>) {
                    return lat.contains(x);
                } else {
                    throw unsupported_error("lattice membership: wrong backend");
                }
            case Kind::center:
                if constexpr (std::is_same_v<G, ZnGroup> || std::is_same_v<G, CyclicGroup> ||
                              std::is_same_v<G, KleinFourGroup>) {
                    return true;
                } else if constexpr (std::is_same_v<G, HeisenbergGroup>) {
                    return g.is_central(x);
                } else if constexpr (std::is_same_v<G, FreeGroup>) {
                    return g.rank == 1 ? true : x == g.identity();
                } else if constexpr (std::is_same_v<G, KleinBottleGroup>) {
                    return x[0] == 0 && x[1] % 2 == 0; // Z(K) = <b^2>
                } else if constexpr (std::is_same_v<G, PromislowGroup>) {
                    return x == g.identity();
                } else {
                    throw unsupported_error("center membership: unsupported backend");
                }
            case Kind::named:
                if constexpr (std::is_same_v<G, KleinBottleGroup>) {
                    if (named_id == "a") return x[1] == 0;
                } else if constexpr (std::is_same_v<G, PromislowGroup>) {
                    if (named_id == "translations") return g.is_translation(x);
                }
                throw unsupported_error("named subgroup '" + named_id +
                                        "' is not defined for this backend");
        }
        throw unsupported_error("subgroup_membership: bad descriptor");
    }

    bool has_coset_oracle() const {
        switch (kind) {
            case Kind::whole:
            case Kind::trivial:
            case Kind::lattice:
                return true;
            case Kind::center:
                return std::is_same_v<G, HeisenbergGroup> || std::is_same_v<G, KleinBottleGroup> ||
                       std::is_same_v<G, ZnGroup> || std::is_same_v<G, CyclicGroup> ||
                       std::is_same_v<G, KleinFourGroup>;
            case Kind::named: return true;
            case Kind::cyclic: return false;
        }
        return false;
    }

    // Canonical representative of the coset Hx (equivalently xH for the
    // normal descriptors supported here).
    typename G::Elt coset_rep(const G& g, const typename G::Elt& x) const {
        switch (kind) {
            case Kind::whole: return g.identity();
            case Kind::trivial: return x;
            case Kind::lattice:
                if constexpr (std::is_same_v<G, ZnGroup>) {
                    return lat.reduce(x);
                } else {
                    break;
                }
            case Kind::center:
                if constexpr (std::is_same_v<G, HeisenbergGroup>) {
                    return typename G::Elt{x[0], x[1], 0};
                } else if constexpr (std::is_same_v<G, KleinBottleGroup>) {
                    return typename G::Elt{x[0], ((x[1] % 2) + 2) % 2};
                } else if constexpr (std::is_same_v<G, ZnGroup> || std::is_same_v<G, CyclicGroup> ||
                                     std::is_same_v<G, KleinFourGroup>) {
                    return g.identity();
                } else {
                    break;
                }
            case Kind::named:
                if constexpr (std::is_same_v<G, KleinBottleGroup>) {
                    if (named_id == "a") return typename G::Elt{0, x[1]};
                } else if constexpr (std::is_same_v<G, PromislowGroup>) {
                    if (named_id == "translations") {
                        auto gens = g.generators();
                        switch (x.s) {
                            case 0: return g.identity();
                            case 1: return gens[0].g;
                            case 2: return gens[1].g;
                            default: return g.compose(gens[0].g, gens[1].g);
                        }
                    }
                }
                break;
            case Kind::cyclic: break;
        }
        throw unsupported_error("subgroup has no coset oracle for this backend");
    }

    std::string describe(const G& g) const {
        switch (kind) {
            case Kind::whole: return "whole";
            case Kind::trivial: return "trivial";
            case Kind::cyclic: return "cyclic<" + g.format(gen) + ">";
            case Kind::lattice: return "lattice" + lat.str();
            case Kind::center: return "center";
            case Kind::named: return "normal:" + named_id;
        }
        return "?";
    }
};

} // namespace grlab
