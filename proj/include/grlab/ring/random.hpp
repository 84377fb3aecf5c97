#pragma once

#include <random>
#include <vector>

#include "grlab/ring/element.hpp"
#include "grlab/up/search.hpp" // uniform_below

namespace grlab {

template <class CR>
typename CR::value_type random_nonzero_coeff(const CR& r, std::mt19937_64& rng) {
    if constexpr (std::is_same_v<CR, FpRing>) {
        return (typename CR::value_type)(1 + uniform_below(rng, r.p - 1));
    } else {
        long long v = 1 + (long long)uniform_below(rng, 3);
        if (uniform_below(rng, 2)) v = -v;
        return r.from_int(v);
    }
}

// Random element with support drawn from `pool`, up to max_support terms,
// nonzero coefficients.  May return zero when max_support is 0.
template <class M>
RingElement<M> random_element(const M& m, const std::vector<typename M::Basis>& pool,
                              std::size_t max_support, std::mt19937_64& rng,
                              bool allow_zero = false) {
    std::size_t lo = allow_zero ? 0 : 1;
    std::size_t k = lo + uniform_below(rng, max_support - lo + 1);
    std::vector<std::pair<typename M::Basis, typename M::CV>> terms;
    std::vector<std::size_t> idx(pool.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t t = 0; t < k && t < pool.size(); ++t) {
        std::size_t r = t + (std::size_t)uniform_below(rng, idx.size() - t);
        std::swap(idx[t], idx[r]);
        terms.push_back({pool[idx[t]], random_nonzero_coeff(m.coeff(), rng)});
    }
    return re_from_terms(m, std::move(terms));
}

} // namespace grlab
