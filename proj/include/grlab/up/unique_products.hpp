#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "grlab/core.hpp"
#include "grlab/group/backend.hpp"

namespace grlab {

// Result of the exact unique-product decision for a pair of finite sets.
// Every reported (g, a, b) satisfies g = a*b with no other factorization in
// A x B; this is re-checked on construction.
template <class G>
struct UPReport {
    struct Factorization {
        typename G::Elt product, a, b;
    };
    std::vector<typename G::Elt> set_a, set_b;
    std::vector<Factorization> uniques; // sorted by product order
    std::size_t pair_count = 0;         // |A| * |B|
    bool two_up = false;                // >= 2 uniques whenever |A|+|B| > 2
};

// Exact unique-product computation by full enumeration of the product
// multiset.
template <class G>
UPReport<G> unique_products(const G& g, std::vector<typename G::Elt> A,
                            std::vector<typename G::Elt> B) {
    if (A.empty() || B.empty()) throw std::invalid_argument("unique_products: empty input set");
    auto dedup = [&](std::vector<typename G::Elt>& v) {
        std::sort(v.begin(), v.end(), BackendLess<G>{&g});
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedup(A);
    dedup(B);

    struct Slot {
        std::size_t count = 0;
        std::size_t ia = 0, ib = 0;
    };
    std::unordered_map<typename G::Elt, Slot, BackendHash<G>, BackendEq<G>> counts(
        A.size() * B.size() * 2, BackendHash<G>{&g}, BackendEq<G>{&g});
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j) {
            auto prod = g.compose(A[i], B[j]);
            auto& slot = counts[prod];
            ++slot.count;
            if (slot.count == 1) {
                slot.ia = i;
                slot.ib = j;
            }
        }

    UPReport<G> rep;
    rep.set_a = A;
    rep.set_b = B;
    rep.pair_count = A.size() * B.size();
    for (const auto& [prod, slot] : counts)
        if (slot.count == 1) rep.uniques.push_back({prod, A[slot.ia], B[slot.ib]});
    std::sort(rep.uniques.begin(), rep.uniques.end(),
              [&](const auto& u, const auto& v) { return g.cmp(u.product, v.product) < 0; });

    // re-verify each reported factorization independently
    for (const auto& u : rep.uniques) {
        if (!(g.compose(u.a, u.b) == u.product))
            throw theorem_alarm("unique_products: reported factorization does not multiply back");
        std::size_t hits = 0;
        for (const auto& a : A)
            for (const auto& b : B)
                if (g.compose(a, b) == u.product) ++hits;
        if (hits != 1) throw theorem_alarm("unique_products: reported product is not unique");
    }

    rep.two_up = A.size() + B.size() > 2 ? rep.uniques.size() >= 2 : !rep.uniques.empty();
    return rep;
}

// Instance-level check of the two-unique-products guarantee on a backend
// whose unique product property is known from the literature.  Raises a
// theorem alarm if fewer than two unique products show up; this must never
// fire on the supported backends.
template <class G>
std::pair<typename G::Elt, typename G::Elt> up_oracle_check(const G& g,
                                                            const std::vector<typename G::Elt>& A,
                                                            const std::vector<typename G::Elt>& B) {
    if (A.size() + B.size() <= 2)
        throw std::invalid_argument("up_oracle_check: needs |A|+|B| > 2");
    if (!g.unique_product_group())
        throw unsupported_error("up_oracle_check: " + g.name() + " is not a UP backend");
    auto rep = unique_products(g, A, B);
    if (rep.uniques.size() < 2)
        throw theorem_alarm("two-unique-products violated on UP backend " + g.name());
    return {rep.uniques[0].product, rep.uniques[1].product};
}

} // namespace grlab
