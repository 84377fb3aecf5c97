#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

#include "grlab/core.hpp"
#include "grlab/up/unique_products.hpp"

namespace grlab {

// Platform-stable bounded sampler (std::uniform_int_distribution is not
// reproducible across standard libraries).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

template <class G>
struct NonUpSearchResult {
    bool found = false;
    std::vector<typename G::Elt> witness;
    std::uint64_t attempts_done = 0;
    std::uint64_t found_attempt = 0;
};

// Randomized hunt for a square set without unique products: uniformly random
// size-`size` subsets of ball(radius), each handed to the exact checker.
// Attempt i draws from an RNG stream derived from (seed, i), so the result
// is reproducible from the seed and independent of the number of workers;
// the lowest successful attempt index wins.  `symmetric` biases sampling to
// inverse-closed sets (witness sets in the literature have this shape).
template <class G>
NonUpSearchResult<G> find_non_up_square_set(const G& g, std::size_t size, int radius,
                                            std::uint64_t seed, std::uint64_t attempts,
                                            int jobs = 1, bool symmetric = false) {
    if (size < 2) throw std::invalid_argument("find_non_up_square_set: size must be >= 2");
    auto B = ball(g, radius);
    if (B.size() < size)
        throw std::invalid_argument("find_non_up_square_set: ball smaller than requested size");

    // inverse pairing for the symmetric sampler: indices of {x, x^-1} pairs
    // with x != x^-1
    std::vector<std::pair<std::size_t, std::size_t>> inv_pairs;
    if (symmetric) {
        auto less = BackendLess<G>{&g};
        for (std::size_t i = 0; i < B.size(); ++i) {
            auto inv = g.inverse(B[i]);
            for (std::size_t j = i + 1; j < B.size(); ++j)
                if (B[j] == inv) inv_pairs.push_back({i, j});
        }
        (void)less;
        if (size % 2 != 0 || inv_pairs.size() < size / 2)
            throw std::invalid_argument("find_non_up_square_set: symmetric sampling impossible");
    }

    auto sample_attempt = [&](std::uint64_t i) {
        std::mt19937_64 rng(splitmix64(seed ^ (0x5eedULL + i * 0x9e3779b97f4a7c15ULL)));
        std::vector<typename G::Elt> S;
        if (!symmetric) {
            // partial Fisher-Yates over index array
            std::vector<std::size_t> idx(B.size());
            for (std::size_t t = 0; t < idx.size(); ++t) idx[t] = t;
            for (std::size_t t = 0; t < size; ++t) {
                std::size_t r = t + (std::size_t)uniform_below(rng, idx.size() - t);
                std::swap(idx[t], idx[r]);
                S.push_back(B[idx[t]]);
            }
        } else {
            std::vector<std::size_t> idx(inv_pairs.size());
            for (std::size_t t = 0; t < idx.size(); ++t) idx[t] = t;
            for (std::size_t t = 0; t < size / 2; ++t) {
                std::size_t r = t + (std::size_t)uniform_below(rng, idx.size() - t);
                std::swap(idx[t], idx[r]);
                S.push_back(B[inv_pairs[idx[t]].first]);
                S.push_back(B[inv_pairs[idx[t]].second]);
            }
        }
        return S;
    };

    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best_found{~std::uint64_t(0)};
    std::mutex mtx;
    std::vector<typename G::Elt> best_witness;

    auto worker = [&]() {
        while (true) {
            std::uint64_t i = next.fetch_add(1);
            if (i >= attempts) return;
            if (i >= best_found.load()) return; // a lower attempt already won
            auto S = sample_attempt(i);
            auto rep = unique_products(g, S, S);
            if (rep.uniques.empty() && rep.set_a.size() == size) {
                std::uint64_t prev = best_found.load();
                while (i < prev && !best_found.compare_exchange_weak(prev, i)) {
                }
                if (i <= best_found.load()) {
                    std::lock_guard<std::mutex> lk(mtx);
                    if (i == best_found.load()) best_witness = rep.set_a;
                }
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    NonUpSearchResult<G> res;
    res.attempts_done = attempts;
    if (best_found.load() != ~std::uint64_t(0)) {
        res.found = true;
        res.found_attempt = best_found.load();
        res.attempts_done = res.found_attempt + 1; // deterministic regardless of worker timing
        res.witness = best_witness;
        // self-verification: any returned set must re-verify to zero uniques
        auto rep = unique_products(g, res.witness, res.witness);
        if (!rep.uniques.empty())
            throw theorem_alarm("find_non_up_square_set: witness failed re-verification");
    }
    return res;
}

} // namespace grlab
