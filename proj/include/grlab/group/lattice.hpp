#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "grlab/core.hpp"

namespace grlab {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// Sublattice of Z^n (n <= 3) in row Hermite normal form: echelon rows with
// positive pivots and entries above each pivot reduced into [0, pivot).
// Gives exact membership, canonical coset representatives, rank and index.
struct ZLattice {
    using Vec = std::array<std::int64_t, 3>;

    int n = 0;
    std::vector<Vec> rows;
    std::vector<int> pivots; // pivot column of each row

    static ZLattice from_generators(int n, std::vector<Vec> gens) {
        ZLattice L;
        L.n = n;
        auto& work = gens;
        std::size_t top = 0;
        for (int col = 0; col < n && top < work.size(); ++col) {
            // Euclid among rows [top..) until at most one has a nonzero entry
            // in this column.
            while (true) {
                std::size_t best = work.size();
                int count = 0;
                for (std::size_t i = top; i < work.size(); ++i) {
                    if (work[i][(std::size_t)col] == 0) continue;
                    ++count;
                    if (best == work.size() ||
                        std::llabs(work[i][(std::size_t)col]) < std::llabs(work[best][(std::size_t)col]))
                        best = i;
                }
                if (count == 0) { best = work.size(); break; }
                if (count == 1) { std::swap(work[top], work[best]); break; }
                for (std::size_t i = top; i < work.size(); ++i) {
                    if (i == best || work[i][(std::size_t)col] == 0) continue;
                    std::int64_t q = work[i][(std::size_t)col] / work[best][(std::size_t)col];
                    for (int j = 0; j < n; ++j) work[i][(std::size_t)j] -= q * work[best][(std::size_t)j];
                }
            }
            if (top < work.size() && work[top][(std::size_t)col] != 0) {
                if (work[top][(std::size_t)col] < 0)
                    for (int j = 0; j < n; ++j) work[top][(std::size_t)j] = -work[top][(std::size_t)j];
                L.rows.push_back(work[top]);
                L.pivots.push_back(col);
                ++top;
            }
        }
        // Reduce entries above each pivot.
        for (std::size_t r = 0; r < L.rows.size(); ++r) {
            for (std::size_t above = 0; above < r; ++above) {
                std::int64_t piv = L.rows[r][(std::size_t)L.pivots[r]];
                std::int64_t q = floor_div(L.rows[above][(std::size_t)L.pivots[r]], piv);
                if (q != 0)
                    for (int j = 0; j < n; ++j)
                        L.rows[above][(std::size_t)j] -= q * L.rows[r][(std::size_t)j];
            }
        }
        return L;
    }

    int rank() const { return (int)rows.size(); }

    // |Z^n : L| when L has full rank, 0 otherwise (infinite index).
    std::int64_t index() const {
        if (rank() != n) return 0;
        std::int64_t d = 1;
        for (std::size_t r = 0; r < rows.size(); ++r) d *= rows[r][(std::size_t)pivots[r]];
        return d;
    }

    bool contains(const Vec& v) const {
        Vec w = v;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            int c = pivots[r];
            std::int64_t piv = rows[r][(std::size_t)c];
            if (w[(std::size_t)c] % piv != 0) return false;
            std::int64_t q = w[(std::size_t)c] / piv;
            for (int j = 0; j < n; ++j) w[(std::size_t)j] -= q * rows[r][(std::size_t)j];
        }
        for (int j = 0; j < n; ++j)
            if (w[(std::size_t)j] != 0) return false;
        return true;
    }

    // Canonical representative of v + L.
    Vec reduce(const Vec& v) const {
        Vec w = v;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            int c = pivots[r];
            std::int64_t piv = rows[r][(std::size_t)c];
            std::int64_t q = floor_div(w[(std::size_t)c], piv);
            for (int j = 0; j < n; ++j) w[(std::size_t)j] -= q * rows[r][(std::size_t)j];
        }
        return w;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r) s += ";";
            s += "(";
            for (int j = 0; j < n; ++j) {
                if (j) s += ",";
                s += std::to_string(rows[r][(std::size_t)j]);
            }
            s += ")";
        }
        return s + "]";
    }
};

} // namespace grlab
