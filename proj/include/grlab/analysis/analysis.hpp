#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grlab/group/subgroup.hpp"
#include "grlab/ring/element.hpp"
#include "grlab/ring/random.hpp"

namespace grlab {

// ---------------------------------------------------------------------------
// support_subgroup: generators of the subgroup generated by Supp(x); for z^n
// backends additionally a canonical lattice basis, its rank and its index.
// ---------------------------------------------------------------------------

template <class M>
struct SupportSubgroupInfo {
    std::vector<typename M::Basis> generators; // = Supp(x)
    std::optional<ZLattice> lattice;           // z^n backends only
};

template <class M>
SupportSubgroupInfo<M> support_subgroup(const M& m, const RingElement<M>& x) {
    SupportSubgroupInfo<M> info;
    info.generators = support_of(x);
    if constexpr (std::is_same_v<typename M::Group, ZnGroup>) {
        std::vector<std::array<std::int64_t, 3>> gens;
        for (const auto& g : info.generators) gens.push_back(g);
        info.lattice = ZLattice::from_generators(m.backend().n, gens);
    }
    return info;
}

// ---------------------------------------------------------------------------
// delta_probe: three-valued membership in Delta(G) (the set of elements with
// finitely many conjugates).  `member` verdicts come only from exact
// backend oracles; everything else stays `unknown_at_radius`, always with
// the number of distinct conjugates seen in the probed ball as evidence.
// ---------------------------------------------------------------------------

enum class DeltaMembership { member, non_member, unknown_at_radius };

template <class G>
struct DeltaVerdict {
    typename G::Elt element;
    DeltaMembership verdict = DeltaMembership::unknown_at_radius;
    std::size_t conjugates_found = 0;
    int radius = 0;
};

template <class G>
std::optional<bool> delta_oracle(const G& g, const typename G::Elt& x) {
    if constexpr (std::is_same_v<G, ZnGroup> || std::is_same_v<G, CyclicGroup> ||
                  std::is_same_v<G, KleinFourGroup>) {
        (void)g;
        (void)x;
        return true;
    } else if constexpr (std::is_same_v<G, HeisenbergGroup>) {
        return g.is_central(x) ? std::optional<bool>(true) : std::nullopt;
    } else if constexpr (std::is_same_v<G, FreeGroup>) {
        if (g.rank == 1 || x == g.identity()) return true;
        return std::nullopt;
    } else if constexpr (std::is_same_v<G, KleinBottleGroup>) {
        // Delta(K) = <a, b^2>: conjugates of a^m b^n with n even are
        // {a^(+-m) b^n}
        if (x[1] % 2 == 0) return true;
        return std::nullopt;
    } else if constexpr (std::is_same_v<G, PromislowGroup>) {
        if (g.is_translation(x)) return true; // sign parts act with finite orbit
        return std::nullopt;
    } else {
        return std::nullopt;
    }
}

template <class G>
DeltaVerdict<G> delta_probe(const G& g, const typename G::Elt& x, int radius) {
    DeltaVerdict<G> v;
    v.element = x;
    v.radius = radius;
    auto conj = make_elt_set(g);
    for (const auto& s : ball(g, radius)) conj.insert(conjugated(g, x, s));
    v.conjugates_found = conj.size();
    auto oracle = delta_oracle(g, x);
    v.verdict = oracle.has_value()
                    ? (*oracle ? DeltaMembership::member : DeltaMembership::non_member)
                    : DeltaMembership::unknown_at_radius;
    return v;
}

// ---------------------------------------------------------------------------
// is_central: x commutes with every coefficient scalar (automatic in these
// models) and with every algebra generator basis element; the generators
// generate, so the answer is exact.
// ---------------------------------------------------------------------------

template <class M>
bool is_central(const M& m, const RingElement<M>& x) {
    for (const auto& gb : m.algebra_generators()) {
        auto u = re_monomial(m, gb, m.coeff().one());
        if (!(re_mul(m, x, u) == re_mul(m, u, x))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// coarsen: split x into coset-homogeneous parts for a normal subgroup N with
// a coset oracle.  Parts are keyed by the canonical coset representative,
// sum to x, and have disjoint coset supports.
// ---------------------------------------------------------------------------

template <class M>
struct CoarsenPart {
    typename M::Basis coset_rep;
    std::string coset_degree;
    RingElement<M> part;
};

template <class G>
std::string coset_degree_str(const G& g, const Subgroup<G>& N, const typename G::Elt& rep) {
    if constexpr (std::is_same_v<G, KleinBottleGroup>) {
        if (N.kind == Subgroup<G>::Kind::named && N.named_id == "a")
            return std::to_string(rep[1]); // quotient K/<a> = Z by b-exponent
    }
    if constexpr (std::is_same_v<G, ZnGroup>) {
        if (N.kind == Subgroup<G>::Kind::lattice) return g.format_tuple(rep);
    }
    return g.format(rep);
}

template <class M, class G = typename M::Group>
std::vector<CoarsenPart<M>> coarsen(const M& m, const RingElement<M>& x, const Subgroup<G>& N) {
    if (!N.has_coset_oracle())
        throw unsupported_error("coarsen: subgroup has no coset oracle");
    const auto& g = m.backend();
    std::vector<CoarsenPart<M>> parts;
    for (const auto& t : x.terms) {
        auto rep = N.coset_rep(g, t.first);
        CoarsenPart<M>* slot = nullptr;
        for (auto& p : parts)
            if (p.coset_rep == rep) slot = &p;
        if (!slot) {
            parts.push_back({rep, coset_degree_str(g, N, rep), {}});
            slot = &parts.back();
        }
        slot->part.terms.push_back(t);
    }
    std::sort(parts.begin(), parts.end(),
              [&](const auto& a, const auto& b) { return g.cmp(a.coset_rep, b.coset_rep) < 0; });
    return parts;
}

// ---------------------------------------------------------------------------
// prime_witness: search basis elements r = u_g for g in ball(radius), in
// word-length order, for x * u_g * y != 0.  For a domain, g = e succeeds
// immediately.  A not-found outcome on a torsion-free backend is a theorem
// alarm at the caller's discretion; here it is just reported.
// ---------------------------------------------------------------------------

template <class M>
struct PrimeWitnessResult {
    bool found = false;
    typename M::Basis witness{};
    RingElement<M> product;
    std::size_t tried = 0;
};

template <class M>
PrimeWitnessResult<M> prime_witness(const M& m, const RingElement<M>& x, const RingElement<M>& y,
                                    int radius) {
    if (x.is_zero() || y.is_zero())
        throw std::invalid_argument("prime_witness: inputs must be nonzero");
    PrimeWitnessResult<M> res;
    for (const auto& g : m.ball_window(radius)) {
        ++res.tried;
        auto p = re_mul(m, re_mul(m, x, re_monomial(m, g, m.coeff().one())), y);
        if (!p.is_zero()) {
            res.found = true;
            res.witness = g;
            res.product = p;
            return res;
        }
    }
    return res;
}

} // namespace grlab
