#pragma once

#include <unordered_map>

#include "grlab/ring/element.hpp"
#include "grlab/search/linalg.hpp"

namespace grlab {

// Fixed-candidate decisions: is x (right-)invertible / a left zero-divisor
// with partner support confined to the given window?  Implemented directly
// as one dense exact solve, independent of the enumeration engine; used by
// the subgroup-transfer tests to compare H-restricted and ambient verdicts.

template <class M>
struct SingleDecision {
    bool yes = false;
    RingElement<M> partner;
};

namespace detail {

template <class M, class Field>
SingleDecision<M> decide_single(const M& m, const RingElement<M>& x,
                                const std::vector<typename M::Basis>& partner_window, bool unit,
                                Field field) {
    if (x.is_zero()) throw std::invalid_argument("decide: candidate must be nonzero");
    std::vector<typename M::Basis> rows;
    std::unordered_map<std::string, int> ids;
    auto intern = [&](const typename M::Basis& b) {
        auto key = m.format_basis(b);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        int id = (int)rows.size();
        rows.push_back(b);
        ids.emplace(std::move(key), id);
        return id;
    };
    int one_row = unit ? intern(m.one()) : -1;
    struct Entry {
        int r, c;
        typename M::CV v;
    };
    std::vector<Entry> entries;
    for (int h = 0; h < (int)partner_window.size(); ++h)
        for (const auto& [g, cg] : x.terms)
            m.mul_basis(g, partner_window[(std::size_t)h],
                        [&](const typename M::Basis& b, const typename M::CV& s) {
                            auto v = m.coeff().mul(cg, s);
                            if (!m.coeff().is_zero(v)) entries.push_back({intern(b), h, v});
                        });
    DenseSolver<Field> solver(field);
    solver.reset((int)rows.size(), (int)partner_window.size());
    for (const auto& e : entries) solver.add(e.r, e.c, e.v);
    if (unit) solver.add_target(one_row, m.coeff().one());
    solver.rref();

    SingleDecision<M> out;
    if (unit) {
        if (!solver.consistent()) return out;
        auto sol = solver.solution();
        RingElement<M> y;
        for (std::size_t t = 0; t < sol.size(); ++t)
            if (!m.coeff().is_zero(sol[t])) y.terms.push_back({partner_window[t], sol[t]});
        y = re_from_terms(m, std::move(y.terms));
        if (!(re_mul(m, x, y) == re_one(m)))
            throw theorem_alarm("decide_unit: solver produced a non-inverse");
        out.yes = true;
        out.partner = y;
    } else {
        if (!solver.has_kernel()) return out;
        auto basis = solver.kernel_basis(1);
        RingElement<M> y;
        for (std::size_t t = 0; t < basis[0].size(); ++t)
            if (!m.coeff().is_zero(basis[0][t])) y.terms.push_back({partner_window[t], basis[0][t]});
        y = re_from_terms(m, std::move(y.terms));
        if (y.is_zero() || !re_mul(m, x, y).is_zero())
            throw theorem_alarm("decide_zero_divisor: kernel vector fails");
        out.yes = true;
        out.partner = y;
    }
    return out;
}

} // namespace detail

// Does some y with Supp(y) in the window satisfy x*y = 1?
template <class M>
SingleDecision<M> decide_right_invertible(const M& m, const RingElement<M>& x,
                                          const std::vector<typename M::Basis>& partner_window) {
    if constexpr (std::is_same_v<typename M::CoeffRing, FpRing>) {
        return detail::decide_single(m, x, partner_window, true, FpField{m.coeff().p});
    } else {
        return detail::decide_single(m, x, partner_window, true,
                                     ExactField<typename M::CoeffRing>{m.coeff()});
    }
}

// Does some nonzero y with Supp(y) in the window satisfy x*y = 0?
template <class M>
SingleDecision<M> decide_left_zero_divisor(const M& m, const RingElement<M>& x,
                                           const std::vector<typename M::Basis>& partner_window) {
    if constexpr (std::is_same_v<typename M::CoeffRing, FpRing>) {
        return detail::decide_single(m, x, partner_window, false, FpField{m.coeff().p});
    } else {
        return detail::decide_single(m, x, partner_window, false,
                                     ExactField<typename M::CoeffRing>{m.coeff()});
    }
}

} // namespace grlab
