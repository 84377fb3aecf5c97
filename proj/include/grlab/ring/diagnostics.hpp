#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grlab/ring/element.hpp"
#include "grlab/ring/random.hpp"

namespace grlab {

// Gradation diagnostics: probes full component regularity (no product of two
// nonzero homogeneous elements vanishes) and non-degeneracy (no nonzero
// homogeneous r_g kills an entire inverse-degree component sample) over a
// window.  With `trivial_view` the whole window counts as one degree class
// (everything homogeneous), which is how a torsion control like F2[C2] shows
// its zero-divisor as a regularity violation.
//
// Reports violations found; absence of violations is evidence for the
// window, never a proof.
struct DiagnosticsReport {
    std::string model;
    int radius = 0;
    std::uint64_t samples_requested = 0;
    bool trivial_view = false;
    bool exhaustive = false;
    std::uint64_t pairs_checked = 0;
    std::uint64_t fcr_violations = 0;
    std::uint64_t nondeg_alarms = 0;
    std::vector<std::string> examples;
};

namespace detail {

template <class M>
std::vector<std::vector<typename M::Basis>> degree_classes(const M& m,
                                                           const std::vector<typename M::Basis>& W,
                                                           bool trivial_view) {
    std::vector<std::vector<typename M::Basis>> classes;
    if (trivial_view) {
        classes.push_back(W);
        return classes;
    }
    for (const auto& b : W) {
        bool placed = false;
        for (auto& c : classes)
            if (m.deg_equal(c[0], b)) {
                c.push_back(b);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({b});
    }
    return classes;
}

// Enumerate all nonzero coefficient vectors over a small class (F_p only).
template <class M, class Fn>
void for_each_class_element(const M& m, const std::vector<typename M::Basis>& cls, Fn&& fn) {
    const auto& R = m.coeff();
    std::vector<std::uint32_t> v(cls.size(), 0);
    const std::uint32_t p = R.p;
    while (true) {
        std::size_t i = 0;
        while (i < v.size() && v[i] == p - 1) v[i++] = 0;
        if (i == v.size()) break;
        ++v[i];
        std::vector<std::pair<typename M::Basis, typename M::CV>> terms;
        for (std::size_t t = 0; t < cls.size(); ++t)
            if (v[t]) terms.push_back({cls[t], (typename M::CV)v[t]});
        fn(re_from_terms(m, std::move(terms)));
    }
}

} // namespace detail

template <class M>
DiagnosticsReport gradation_diagnostics(const M& m, int radius, std::uint64_t samples,
                                        std::uint64_t seed, bool trivial_view = false) {
    DiagnosticsReport rep;
    rep.model = m.name();
    rep.radius = radius;
    rep.samples_requested = samples;
    rep.trivial_view = trivial_view;

    auto W = m.ball_window(radius);
    auto classes = detail::degree_classes(m, W, trivial_view);

    auto inverse_class_of = [&](const typename M::Basis& b) -> const std::vector<typename M::Basis>* {
        // the class whose degrees compose with deg(b) to the identity degree
        for (const auto& c : classes) {
            bool hit = false;
            m.mul_basis(b, c[0], [&](const typename M::Basis& prod, const typename M::CV&) {
                if (m.deg_equal(prod, m.one())) hit = true;
            });
            if (trivial_view || hit) return &c;
        }
        return nullptr;
    };

    auto record_violation = [&](const RingElement<M>& x, const RingElement<M>& y) {
        ++rep.fcr_violations;
        if (rep.examples.size() < 8)
            rep.examples.push_back("(" + to_string(m, x) + ") * (" + to_string(m, y) + ") = 0");
    };

    auto nondeg_probe = [&](const RingElement<M>& x) {
        const auto* inv = inverse_class_of(x.terms[0].first);
        if (!inv) return;
        bool right_alive = false, left_alive = false;
        for (const auto& b : *inv) {
            auto u = re_monomial(m, b, m.coeff().one());
            if (!re_mul(m, x, u).is_zero()) right_alive = true;
            if (!re_mul(m, u, x).is_zero()) left_alive = true;
            if (right_alive && left_alive) return;
        }
        ++rep.nondeg_alarms;
        if (rep.examples.size() < 8)
            rep.examples.push_back("non-degeneracy alarm at " + to_string(m, x));
    };

    // decide exhaustive vs sampled
    constexpr bool fp = std::is_same_v<typename M::CoeffRing, FpRing>;
    std::uint64_t total_pairs = UINT64_MAX;
    if constexpr (fp) {
        long double tp = 0;
        for (const auto& ca : classes)
            for (const auto& cb : classes) {
                long double na = 1, nb = 1;
                for (std::size_t i = 0; i < ca.size(); ++i) na *= m.coeff().p;
                for (std::size_t i = 0; i < cb.size(); ++i) nb *= m.coeff().p;
                tp += (na - 1) * (nb - 1);
                if (tp > 1e7) break;
            }
        total_pairs = tp > 1e7 ? UINT64_MAX : (std::uint64_t)tp;
    }

    if (fp && total_pairs <= 200000) {
        rep.exhaustive = true;
        if constexpr (std::is_same_v<typename M::CoeffRing, FpRing>) {
            for (const auto& ca : classes)
                for (const auto& cb : classes)
                    detail::for_each_class_element(m, ca, [&](const RingElement<M>& x) {
                        detail::for_each_class_element(m, cb, [&](const RingElement<M>& y) {
                            ++rep.pairs_checked;
                            if (re_mul(m, x, y).is_zero()) record_violation(x, y);
                        });
                    });
            for (const auto& ca : classes)
                detail::for_each_class_element(m, ca,
                                               [&](const RingElement<M>& x) { nondeg_probe(x); });
        }
    } else {
        std::mt19937_64 rng(splitmix64(seed));
        for (std::uint64_t s = 0; s < samples; ++s) {
            const auto& ca = classes[uniform_below(rng, classes.size())];
            const auto& cb = classes[uniform_below(rng, classes.size())];
            auto x = random_element(m, ca, ca.size(), rng);
            auto y = random_element(m, cb, cb.size(), rng);
            if (x.is_zero() || y.is_zero()) continue;
            ++rep.pairs_checked;
            if (re_mul(m, x, y).is_zero()) record_violation(x, y);
            nondeg_probe(x);
        }
    }
    return rep;
}

} // namespace grlab
