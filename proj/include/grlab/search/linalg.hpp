#pragma once

#include <cstdint>
#include <vector>

#include "grlab/coeff.hpp"

namespace grlab {

// Dense augmented linear solvers used on the residual systems of the search
// engine.  Both solvers implement the same reduced-row-echelon algorithm with
// the same pivot policy (columns left to right, first nonzero row), so the
// generic mod-p path and the F2 bitset path produce identical solutions and
// kernel bases; only the arithmetic representation differs.

struct FpField {
    std::uint32_t p;
    using Value = std::uint32_t;
    Value zero() const { return 0; }
    Value one() const { return 1 % p; }
    bool is_zero(Value a) const { return a == 0; }
    Value add(Value a, Value b) const {
        Value s = a + b;
        return s >= p ? s - p : s;
    }
    Value neg(Value a) const { return a == 0 ? 0 : p - a; }
    Value sub(Value a, Value b) const { return add(a, neg(b)); }
    Value mul(Value a, Value b) const { return (Value)((std::uint64_t)a * b % p); }
    Value inv(Value a) const { return FpRing(p).inv(a); }
};

template <class CR>
struct ExactField {
    CR r;
    using Value = typename CR::value_type;
    Value zero() const { return r.zero(); }
    Value one() const { return r.one(); }
    bool is_zero(const Value& a) const { return r.is_zero(a); }
    Value add(const Value& a, const Value& b) const { return r.add(a, b); }
    Value neg(const Value& a) const { return r.neg(a); }
    Value sub(const Value& a, const Value& b) const { return r.sub(a, b); }
    Value mul(const Value& a, const Value& b) const { return r.mul(a, b); }
    Value inv(const Value& a) const { return r.inv(a); }
};

template <class F>
class DenseSolver {
  public:
    using Value = typename F::Value;

    explicit DenseSolver(F f) : f_(f) {}

    void reset(int rows, int cols) {
        rows_ = rows;
        cols_ = cols;
        m_.assign((std::size_t)rows, std::vector<Value>((std::size_t)cols + 1, f_.zero()));
        rank_ = 0;
        pivot_col_.clear();
        pivot_row_of_col_.assign((std::size_t)cols, -1);
    }

    void add(int r, int c, const Value& v) {
        m_[(std::size_t)r][(std::size_t)c] = f_.add(m_[(std::size_t)r][(std::size_t)c], v);
    }
    void add_target(int r, const Value& v) { add(r, cols_, v); }

    void rref() {
        int prow = 0;
        for (int c = 0; c < cols_ && prow < rows_; ++c) {
            int sel = -1;
            for (int r = prow; r < rows_; ++r)
                if (!f_.is_zero(m_[(std::size_t)r][(std::size_t)c])) {
                    sel = r;
                    break;
                }
            if (sel < 0) continue;
            std::swap(m_[(std::size_t)sel], m_[(std::size_t)prow]);
            Value iv = f_.inv(m_[(std::size_t)prow][(std::size_t)c]);
            for (int j = c; j <= cols_; ++j)
                m_[(std::size_t)prow][(std::size_t)j] = f_.mul(m_[(std::size_t)prow][(std::size_t)j], iv);
            for (int r = 0; r < rows_; ++r) {
                if (r == prow) continue;
                Value fct = m_[(std::size_t)r][(std::size_t)c];
                if (f_.is_zero(fct)) continue;
                for (int j = c; j <= cols_; ++j)
                    m_[(std::size_t)r][(std::size_t)j] = f_.sub(
                        m_[(std::size_t)r][(std::size_t)j],
                        f_.mul(fct, m_[(std::size_t)prow][(std::size_t)j]));
            }
            pivot_col_.push_back(c);
            pivot_row_of_col_[(std::size_t)c] = prow;
            ++prow;
        }
        rank_ = prow;
    }

    bool consistent() const {
        for (int r = rank_; r < rows_; ++r)
            if (!f_.is_zero(m_[(std::size_t)r][(std::size_t)cols_])) return false;
        return true;
    }
    int rank() const { return rank_; }
    bool has_kernel() const { return rank_ < cols_; }

    // one solution with all free variables zero (requires consistent())
    std::vector<Value> solution() const {
        std::vector<Value> x((std::size_t)cols_, f_.zero());
        for (int i = 0; i < rank_; ++i)
            x[(std::size_t)pivot_col_[(std::size_t)i]] = m_[(std::size_t)i][(std::size_t)cols_];
        return x;
    }

    // kernel basis vectors in ascending free-column order
    std::vector<std::vector<Value>> kernel_basis(std::size_t max_vecs) const {
        std::vector<std::vector<Value>> out;
        for (int c = 0; c < cols_ && out.size() < max_vecs; ++c) {
            if (pivot_row_of_col_[(std::size_t)c] >= 0) continue;
            std::vector<Value> v((std::size_t)cols_, f_.zero());
            v[(std::size_t)c] = f_.one();
            for (int i = 0; i < rank_; ++i) {
                int pc = pivot_col_[(std::size_t)i];
                v[(std::size_t)pc] = f_.neg(m_[(std::size_t)i][(std::size_t)c]);
            }
            out.push_back(std::move(v));
        }
        return out;
    }

    std::size_t kernel_dim() const { return (std::size_t)(cols_ - rank_); }

  private:
    F f_;
    int rows_ = 0, cols_ = 0, rank_ = 0;
    std::vector<std::vector<Value>> m_;
    std::vector<int> pivot_col_;
    std::vector<int> pivot_row_of_col_;
};

// Bit-packed variant for F2: a row is an array of 64-bit words covering
// cols+1 bit positions (the last is the target).
class F2Solver {
  public:
    using Value = std::uint32_t;

    void reset(int rows, int cols) {
        rows_ = rows;
        cols_ = cols;
        words_ = (std::size_t)(cols + 1 + 63) / 64;
        m_.assign((std::size_t)rows * words_, 0);
        rank_ = 0;
        pivot_col_.clear();
        pivot_row_of_col_.assign((std::size_t)cols, -1);
    }

    void add(int r, int c, Value v) {
        if (v & 1) m_[(std::size_t)r * words_ + (std::size_t)c / 64] ^= 1ULL << (c % 64);
    }
    void add_target(int r, Value v) { add(r, cols_, v); }

    void rref() {
        int prow = 0;
        for (int c = 0; c < cols_ && prow < rows_; ++c) {
            std::size_t w = (std::size_t)c / 64;
            std::uint64_t bit = 1ULL << (c % 64);
            int sel = -1;
            for (int r = prow; r < rows_; ++r)
                if (m_[(std::size_t)r * words_ + w] & bit) {
                    sel = r;
                    break;
                }
            if (sel < 0) continue;
            if (sel != prow)
                for (std::size_t j = 0; j < words_; ++j)
                    std::swap(m_[(std::size_t)sel * words_ + j], m_[(std::size_t)prow * words_ + j]);
            for (int r = 0; r < rows_; ++r) {
                if (r == prow) continue;
                if (m_[(std::size_t)r * words_ + w] & bit)
                    for (std::size_t j = 0; j < words_; ++j)
                        m_[(std::size_t)r * words_ + j] ^= m_[(std::size_t)prow * words_ + j];
            }
            pivot_col_.push_back(c);
            pivot_row_of_col_[(std::size_t)c] = prow;
            ++prow;
        }
        rank_ = prow;
    }

    bool get(int r, int c) const {
        return (m_[(std::size_t)r * words_ + (std::size_t)c / 64] >> (c % 64)) & 1;
    }

    bool consistent() const {
        for (int r = rank_; r < rows_; ++r)
            if (get(r, cols_)) return false;
        return true;
    }
    int rank() const { return rank_; }
    bool has_kernel() const { return rank_ < cols_; }
    std::size_t kernel_dim() const { return (std::size_t)(cols_ - rank_); }

    std::vector<Value> solution() const {
        std::vector<Value> x((std::size_t)cols_, 0);
        for (int i = 0; i < rank_; ++i)
            x[(std::size_t)pivot_col_[(std::size_t)i]] = get(i, cols_) ? 1 : 0;
        return x;
    }

    std::vector<std::vector<Value>> kernel_basis(std::size_t max_vecs) const {
        std::vector<std::vector<Value>> out;
        for (int c = 0; c < cols_ && out.size() < max_vecs; ++c) {
            if (pivot_row_of_col_[(std::size_t)c] >= 0) continue;
            std::vector<Value> v((std::size_t)cols_, 0);
            v[(std::size_t)c] = 1;
            for (int i = 0; i < rank_; ++i)
                if (get(i, c)) v[(std::size_t)pivot_col_[(std::size_t)i]] = 1;
            out.push_back(std::move(v));
        }
        return out;
    }

  private:
    int rows_ = 0, cols_ = 0, rank_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> m_;
    std::vector<int> pivot_col_;
    std::vector<int> pivot_row_of_col_;
};

} // namespace grlab
