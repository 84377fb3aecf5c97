#pragma once

#include <cstdint>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "grlab/coeff.hpp"
#include "grlab/core.hpp"
#include "grlab/group/backend.hpp"
#include "grlab/group/cyclic.hpp"

namespace grlab {

namespace detail {

template <class M, class = void>
struct is_group_like : std::false_type {};
template <class M>
struct is_group_like<M, std::void_t<decltype(std::declval<const M&>().backend())>>
    : std::true_type {};

} // namespace detail

// ---------------------------------------------------------------------------
// Ring models.  A model fixes the basis index set, the coefficient ring and
// the structure constants of basis multiplication.  Elements are finite
// supported sums over the basis (see ring/element.hpp).
//
// Every model provides:
//   Basis, CoeffRing            types
//   coeff()                     the coefficient ring instance
//   one()                       the basis index of the ring identity
//   cmp/hash/format_basis       canonical order, hashing, printing
//   mul_basis(a, b, sink)       emits the terms of (basis a) * (basis b)
//   deg_equal(a, b)             equality of grading degrees
//   degree_str(a)               display form of the grading degree
//   grading_torsion_free()      whether the grading group is torsion-free
// ---------------------------------------------------------------------------

// Group ring K[G] with its canonical G-gradation (each basis element is
// homogeneous of its own degree).
template <class G, class CR>
struct GroupRingModel {
    using Group = G;
    using Basis = typename G::Elt;
    using CoeffRing = CR;
    using CV = typename CR::value_type;

    G group;
    CR ring;

    GroupRingModel(G g, CR r) : group(std::move(g)), ring(std::move(r)) {}

    const CR& coeff() const { return ring; }
    const G& backend() const { return group; }

    Basis one() const { return group.identity(); }
    int cmp(const Basis& a, const Basis& b) const { return group.cmp(a, b); }
    std::size_t hash(const Basis& a) const { return group.hash(a); }
    std::string format_basis(const Basis& a) const { return group.format(a); }

    template <class Sink>
    void mul_basis(const Basis& a, const Basis& b, Sink&& sink) const {
        sink(group.compose(a, b), ring.one());
    }

    bool deg_equal(const Basis& a, const Basis& b) const { return a == b; }
    std::string degree_str(const Basis& a) const { return group.format(a); }
    bool grading_torsion_free() const { return group.torsion_free(); }

    std::vector<Basis> ball_window(int r) const { return ball(group, r); }
    std::vector<Basis> algebra_generators() const {
        std::vector<Basis> gens;
        for (const auto& gen : group.generators()) gens.push_back(gen.g);
        return gens;
    }

    std::string name() const { return "groupring(" + group.name() + "," + ring.name() + ")"; }
};

// Twisted group ring K^tau[G] for a finite grading group G: basis u_g with
// u_g u_h = tau(g,h) u_{gh} and trivial action on coefficients.  The cocycle
// must be normalized (tau(e,g) = tau(g,e) = 1) and satisfy the 2-cocycle
// identity tau(g,h) tau(gh,k) = tau(h,k) tau(g,hk); both are checked on
// construction over all group pairs/triples.
template <class G, class CR>
struct TwistedGroupRingModel {
    using Group = G;
    using Basis = typename G::Elt;
    using CoeffRing = CR;
    using CV = typename CR::value_type;

    G group;
    CR ring;
    std::vector<Basis> elements;       // all elements of the finite group
    std::vector<std::vector<CV>> tau;  // tau[i][j] over element indices

    TwistedGroupRingModel(G g, CR r, std::vector<Basis> elems, std::vector<std::vector<CV>> table)
        : group(std::move(g)), ring(std::move(r)), elements(std::move(elems)), tau(std::move(table)) {
        std::size_t m = elements.size();
        std::size_t e = index_of(group.identity());
        for (std::size_t i = 0; i < m; ++i) {
            if (!(tau[e][i] == ring.one()) || !(tau[i][e] == ring.one()))
                throw std::invalid_argument("twisted model: cocycle is not normalized");
            for (std::size_t j = 0; j < m; ++j)
                if (ring.is_zero(tau[i][j]))
                    throw std::invalid_argument("twisted model: cocycle has a zero value");
        }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k) {
                    std::size_t ij = index_of(group.compose(elements[i], elements[j]));
                    std::size_t jk = index_of(group.compose(elements[j], elements[k]));
                    CV lhs = ring.mul(tau[i][j], tau[ij][k]);
                    CV rhs = ring.mul(tau[j][k], tau[i][jk]);
                    if (!(lhs == rhs))
                        throw std::invalid_argument("twisted model: 2-cocycle identity fails");
                }
    }

    std::size_t index_of(const Basis& b) const {
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == b) return i;
        throw std::invalid_argument("twisted model: element not in grading group");
    }

    const CR& coeff() const { return ring; }
    const G& backend() const { return group; }

    Basis one() const { return group.identity(); }
    int cmp(const Basis& a, const Basis& b) const { return group.cmp(a, b); }
    std::size_t hash(const Basis& a) const { return group.hash(a); }
    std::string format_basis(const Basis& a) const { return group.format(a); }

    template <class Sink>
    void mul_basis(const Basis& a, const Basis& b, Sink&& sink) const {
        sink(group.compose(a, b), tau[index_of(a)][index_of(b)]);
    }

    bool deg_equal(const Basis& a, const Basis& b) const { return a == b; }
    std::string degree_str(const Basis& a) const { return group.format(a); }
    bool grading_torsion_free() const { return group.torsion_free(); }

    std::vector<Basis> ball_window(int r) const { return ball(group, r); }
    std::vector<Basis> algebra_generators() const {
        std::vector<Basis> gens;
        for (const auto& gen : group.generators()) gens.push_back(gen.g);
        return gens;
    }

    std::string name() const { return "twisted(" + group.name() + "," + ring.name() + ")"; }
};

// Rational quaternions as a twisted group ring over the Klein four-group:
// u_i^2 = u_j^2 = u_k^2 = -1, u_i u_j = u_k = -u_j u_i.
template <class CR>
TwistedGroupRingModel<KleinFourGroup, CR> make_quaternion_model(CR ring) {
    KleinFourGroup v4;
    using CV = typename CR::value_type;
    std::vector<KleinFourGroup::Elt> elems{0, 1, 2, 3};
    CV pos = ring.one(), neg = ring.neg(ring.one());
    // rows/cols in order e, i, j, k
    std::vector<std::vector<CV>> tau = {
        {pos, pos, pos, pos},
        {pos, neg, pos, neg},
        {pos, neg, neg, pos},
        {pos, pos, neg, neg},
    };
    return TwistedGroupRingModel<KleinFourGroup, CR>(v4, std::move(ring), std::move(elems),
                                                     std::move(tau));
}

// First Weyl algebra over the coefficient ring: generators x, y with
// y x = x y + 1, normal-ordered basis x^i y^j, graded by Z via
// deg(x^i y^j) = i - j.  Products are re-expressed in the normal-ordered
// basis eagerly:
//   (x^i y^j)(x^k y^l) = sum_m m! C(j,m) C(k,m) x^(i+k-m) y^(j+l-m).
template <class CR>
struct WeylModel {
    struct Basis {
        std::int32_t i = 0, j = 0;
        bool operator==(const Basis& o) const { return i == o.i && j == o.j; }
    };
    using CoeffRing = CR;
    using CV = typename CR::value_type;

    CR ring;

    explicit WeylModel(CR r) : ring(std::move(r)) {}

    const CR& coeff() const { return ring; }

    Basis one() const { return {0, 0}; }
    int cmp(const Basis& a, const Basis& b) const {
        if (a.i != b.i) return a.i < b.i ? -1 : 1;
        if (a.j != b.j) return a.j < b.j ? -1 : 1;
        return 0;
    }
    std::size_t hash(const Basis& a) const {
        std::size_t h = 0x3e71;
        hash_mix(h, (std::size_t)(std::uint32_t)a.i);
        hash_mix(h, (std::size_t)(std::uint32_t)a.j);
        return h;
    }
    std::string format_basis(const Basis& a) const {
        std::string s;
        if (a.i != 0) {
            s += "x";
            if (a.i != 1) s += "^" + std::to_string(a.i);
        }
        if (a.j != 0) {
            if (!s.empty()) s += "*";
            s += "y";
            if (a.j != 1) s += "^" + std::to_string(a.j);
        }
        return s.empty() ? "1" : s;
    }

    template <class Sink>
    void mul_basis(const Basis& a, const Basis& b, Sink&& sink) const {
        // y^j x^k = sum_m m! C(j,m) C(k,m) x^(k-m) y^(j-m)
        long long j = a.j, k = b.i;
        long long mmax = j < k ? j : k;
        for (long long m = 0; m <= mmax; ++m) {
            long long c = 1;
            for (long long t = 0; t < m; ++t) c *= (j - t);        // j!/(j-m)!
            for (long long t = 0; t < m; ++t) c = c * (k - t) / (t + 1); // C(k,m)
            CV cv = ring.from_int(c);
            if (ring.is_zero(cv)) continue;
            sink(Basis{(std::int32_t)(a.i + b.i - m), (std::int32_t)(a.j + b.j - m)}, cv);
        }
    }

    bool deg_equal(const Basis& a, const Basis& b) const { return a.i - a.j == b.i - b.j; }
    std::string degree_str(const Basis& a) const { return std::to_string(a.i - a.j); }
    bool grading_torsion_free() const { return true; }

    // all monomials of total degree <= r, by (total degree, i)
    std::vector<Basis> ball_window(int r) const {
        std::vector<Basis> w;
        for (int d = 0; d <= r; ++d)
            for (int i = 0; i <= d; ++i) w.push_back({i, d - i});
        return w;
    }
    std::vector<Basis> algebra_generators() const { return {{1, 0}, {0, 1}}; }

    std::string name() const { return "weyl(" + ring.name() + ")"; }
};


namespace detail {

template <class M>
struct is_plain_group_ring : std::false_type {};
template <class G, class CR>
struct is_plain_group_ring<GroupRingModel<G, CR>> : std::true_type {};

} // namespace detail

} // namespace grlab
