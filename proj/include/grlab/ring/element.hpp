#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "grlab/core.hpp"
#include "grlab/ring/model.hpp"

namespace grlab {

// A ring element: finite formal sum over the model's basis, stored as a term
// vector sorted by the model's canonical basis order with no explicit zero
// coefficients.  Values are immutable in spirit; all operations return new
// elements.
template <class M>
struct RingElement {
    using Basis = typename M::Basis;
    using CV = typename M::CV;
    std::vector<std::pair<Basis, CV>> terms;

    bool is_zero() const { return terms.empty(); }
    std::size_t support_size() const { return terms.size(); }
    bool operator==(const RingElement& o) const { return terms == o.terms; }
};

template <class M>
RingElement<M> re_zero(const M&) {
    return {};
}

template <class M>
RingElement<M> re_monomial(const M& m, const typename M::Basis& b, const typename M::CV& c) {
    RingElement<M> r;
    if (!m.coeff().is_zero(c)) r.terms.push_back({b, c});
    return r;
}

template <class M>
RingElement<M> re_one(const M& m) {
    return re_monomial(m, m.one(), m.coeff().one());
}

// Normalizes an unsorted term list: sorts, merges, prunes zeros.
template <class M>
RingElement<M> re_from_terms(const M& m, std::vector<std::pair<typename M::Basis, typename M::CV>> ts) {
    std::sort(ts.begin(), ts.end(),
              [&](const auto& a, const auto& b) { return m.cmp(a.first, b.first) < 0; });
    RingElement<M> r;
    for (auto& t : ts) {
        if (!r.terms.empty() && r.terms.back().first == t.first) {
            r.terms.back().second = m.coeff().add(r.terms.back().second, t.second);
            if (m.coeff().is_zero(r.terms.back().second)) r.terms.pop_back();
        } else if (!m.coeff().is_zero(t.second)) {
            r.terms.push_back(std::move(t));
        }
    }
    return r;
}

template <class M>
RingElement<M> re_add(const M& m, const RingElement<M>& x, const RingElement<M>& y) {
    RingElement<M> r;
    std::size_t i = 0, j = 0;
    while (i < x.terms.size() || j < y.terms.size()) {
        int c;
        if (i == x.terms.size()) c = 1;
        else if (j == y.terms.size()) c = -1;
        else c = m.cmp(x.terms[i].first, y.terms[j].first);
        if (c < 0) {
            r.terms.push_back(x.terms[i++]);
        } else if (c > 0) {
            r.terms.push_back(y.terms[j++]);
        } else {
            auto s = m.coeff().add(x.terms[i].second, y.terms[j].second);
            if (!m.coeff().is_zero(s)) r.terms.push_back({x.terms[i].first, s});
            ++i, ++j;
        }
    }
    return r;
}

template <class M>
RingElement<M> re_neg(const M& m, const RingElement<M>& x) {
    RingElement<M> r = x;
    for (auto& t : r.terms) t.second = m.coeff().neg(t.second);
    return r;
}

template <class M>
RingElement<M> re_sub(const M& m, const RingElement<M>& x, const RingElement<M>& y) {
    return re_add(m, x, re_neg(m, y));
}

template <class M>
RingElement<M> re_scale(const M& m, const RingElement<M>& x, const typename M::CV& c) {
    if (m.coeff().is_zero(c)) return {};
    RingElement<M> r = x;
    for (auto& t : r.terms) t.second = m.coeff().mul(t.second, c);
    // a domain coefficient ring never produces new zeros here, but F_p can't
    // either since c != 0; keep the prune for safety with future rings
    r.terms.erase(std::remove_if(r.terms.begin(), r.terms.end(),
                                 [&](const auto& t) { return m.coeff().is_zero(t.second); }),
                  r.terms.end());
    return r;
}

template <class M>
RingElement<M> re_mul(const M& m, const RingElement<M>& x, const RingElement<M>& y) {
    std::vector<std::pair<typename M::Basis, typename M::CV>> acc;
    acc.reserve(x.terms.size() * y.terms.size());
    for (const auto& tx : x.terms)
        for (const auto& ty : y.terms) {
            auto c = m.coeff().mul(tx.second, ty.second);
            m.mul_basis(tx.first, ty.first, [&](const typename M::Basis& b, const typename M::CV& s) {
                acc.push_back({b, m.coeff().mul(c, s)});
            });
        }
    return re_from_terms(m, std::move(acc));
}

template <class M>
RingElement<M> re_pow(const M& m, const RingElement<M>& x, long long k);

// Inverse of a single-term element (group-like basis only).
template <class M>
RingElement<M> re_monomial_inverse(const M& m, const RingElement<M>& x) {
    if (x.terms.size() != 1)
        throw std::domain_error("inverse: only single-term elements are invertible here");
    const auto& [b, c] = x.terms[0];
    if (!m.coeff().is_unit(c)) throw std::domain_error("inverse: coefficient is not a unit");
    if constexpr (requires { m.backend(); }) {
        auto binv = m.backend().inverse(b);
        // u_b * u_binv = tau(b, binv) * 1; divide out the cocycle factor
        typename M::CV tau = m.coeff().one();
        m.mul_basis(b, binv, [&](const typename M::Basis&, const typename M::CV& s) { tau = s; });
        return re_monomial(m, binv, m.coeff().inv(m.coeff().mul(c, tau)));
    } else {
        throw std::domain_error("inverse: basis elements of this model are not invertible");
    }
}

template <class M>
RingElement<M> re_pow(const M& m, const RingElement<M>& x, long long k) {
    if (k < 0) return re_pow(m, re_monomial_inverse(m, x), -k);
    RingElement<M> acc = re_one(m);
    RingElement<M> base = x;
    while (k > 0) {
        if (k & 1) acc = re_mul(m, acc, base);
        base = re_mul(m, base, base);
        k >>= 1;
    }
    return acc;
}

template <class M>
std::vector<typename M::Basis> support_of(const RingElement<M>& x) {
    std::vector<typename M::Basis> s;
    s.reserve(x.terms.size());
    for (const auto& t : x.terms) s.push_back(t.first);
    return s;
}

// Homogeneous w.r.t. the model's degree map: all supported basis indices
// share one grading degree.
template <class M>
bool is_homogeneous(const M& m, const RingElement<M>& x) {
    for (std::size_t i = 1; i < x.terms.size(); ++i)
        if (!m.deg_equal(x.terms[0].first, x.terms[i].first)) return false;
    return true;
}

// pi_H: keep exactly the terms whose group part lies in H.
template <class M, class Sub>
RingElement<M> project(const M& m, const RingElement<M>& x, const Sub& H) {
    RingElement<M> r;
    for (const auto& t : x.terms)
        if (H.contains(m.backend(), t.first)) r.terms.push_back(t);
    return r;
}

template <class M>
std::string to_string(const M& m, const RingElement<M>& x) {
    if (x.terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [b, c] : x.terms) {
        bool neg = false;
        typename M::CV cv = c;
        if constexpr (requires { m.coeff().is_neg(c); }) {
            if (m.coeff().is_neg(c)) {
                neg = true;
                cv = m.coeff().neg(c);
            }
        }
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        std::string bs = m.format_basis(b);
        bool unit_coeff = cv == m.coeff().one();
        bool identity_basis = b == m.one();
        if (identity_basis) {
            s += m.coeff().str(cv);
        } else if (unit_coeff) {
            s += bs;
        } else {
            s += m.coeff().str(cv) + "*" + bs;
        }
    }
    return s;
}

} // namespace grlab
