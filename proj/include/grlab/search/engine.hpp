#pragma once

#include <atomic>
#include <chrono>
#include <cstring>
#include <mutex>
#include <thread>
#include <type_traits>

#include "grlab/analysis/analysis.hpp"
#include "grlab/ring/element.hpp"
#include "grlab/search/linalg.hpp"
#include "grlab/search/report.hpp"

namespace grlab {

namespace detail {

// lex-order combinadic over subsets of {0..n-1}, n <= 28
inline std::uint64_t choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * (std::uint64_t)(n - i) / (std::uint64_t)(i + 1);
    return r;
}

// subset of given rank in lex order on increasing index tuples
inline void subset_unrank(int n, int s, std::uint64_t rank, int* out) {
    int v = 0;
    for (int pos = 0; pos < s; ++pos) {
        while (true) {
            std::uint64_t block = choose(n - v - 1, s - pos - 1);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        out[pos] = v++;
    }
}

// successor in lex order; false when exhausted
inline bool subset_next(int n, int s, int* idx) {
    int i = s - 1;
    while (i >= 0 && idx[i] == n - s + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

} // namespace detail

// Resolved input of one search: explicit window vectors plus flags.
template <class M>
struct SearchInput {
    SearchKind kind = SearchKind::unit;
    std::vector<typename M::Basis> window;
    std::vector<typename M::Basis> partner; // unit/zero-divisor only
    bool require_non_homogeneous = false;
    bool central_only = false;
    std::string window_desc = "explicit";
    std::string partner_desc = "explicit";
    SearchLimits limits;
};

// Default partner window {g^-1 h : g in W, h in W + {e}} for group-like
// models; for the Weyl model the window itself (no group inverses exist).
template <class M>
std::vector<typename M::Basis> default_partner_window(const M& m,
                                                      const std::vector<typename M::Basis>& W) {
    std::vector<typename M::Basis> out;
    if constexpr (detail::is_group_like<M>::value) {
        const auto& g = m.backend();
        auto seen = make_elt_set(g);
        auto push = [&](const typename M::Basis& e) {
            if (seen.insert(e).second) out.push_back(e);
        };
        for (const auto& a : W) {
            auto ai = g.inverse(a);
            push(ai);
            for (const auto& b : W) push(g.compose(ai, b));
        }
        std::sort(out.begin(), out.end(), BackendLess<typename M::Group>{&g});
    } else {
        out = W;
    }
    return out;
}

template <class M>
class SearchEngine {
  public:
    using Basis = typename M::Basis;
    using CV = typename M::CV;
    static constexpr bool kGroupLike = detail::is_group_like<M>::value;
    static constexpr bool kFp = std::is_same_v<typename M::CoeffRing, FpRing>;

    SearchEngine(const M& m, SearchInput<M> in) : m_(m), in_(std::move(in)) {
        canonicalize(in_.window);
        if (needs_partner()) {
            if (in_.partner.empty()) {
                in_.partner = default_partner_window(m_, in_.window);
                if (in_.partner_desc == "explicit") in_.partner_desc = "default";
            } else {
                canonicalize(in_.partner);
            }
        } else {
            in_.partner.clear();
            in_.partner_desc = "";
        }
        validate();
    }

    SearchReport run() {
        auto t0 = std::chrono::steady_clock::now();
        SearchReport rep = make_report_shell();
        build_tables();
        if (in_.central_only) build_conjugation_tables();

        // chunked enumeration over (support size, combinadic rank)
        struct Chunk {
            int s;
            std::uint64_t lo, hi;
        };
        std::vector<Chunk> chunks;
        const std::uint64_t chunk_sets = 4096;
        int smin = s_min();
        for (int s = smin; s <= n_; ++s) {
            std::uint64_t total = detail::choose(n_, s);
            for (std::uint64_t lo = 0; lo < total; lo += chunk_sets)
                chunks.push_back({s, lo, std::min(total, lo + chunk_sets)});
        }

        struct ChunkResult {
            std::vector<WitnessRecord> witnesses;
            std::uint64_t found = 0, one_sided = 0;
            SearchCounts counts;
        };
        std::vector<ChunkResult> results(chunks.size());
        std::atomic<std::size_t> next{0};
        std::atomic<bool> stop{false};
        double budget = in_.limits.time_budget_s;

        auto worker = [&]() {
            Workspace ws;
            while (true) {
                std::size_t ci = next.fetch_add(1);
                if (ci >= chunks.size() || stop.load()) return;
                auto& chunk = chunks[ci];
                auto& res = results[ci];
                int idx[32];
                detail::subset_unrank(n_, chunk.s, chunk.lo, idx);
                for (std::uint64_t r = chunk.lo; r < chunk.hi; ++r) {
                    process_set(ws, idx, chunk.s, res.witnesses, res.found, res.one_sided,
                                res.counts);
                    if (r + 1 < chunk.hi) detail::subset_next(n_, chunk.s, idx);
                    if (budget > 0 && (r & 63) == 0) {
                        auto el = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                                t0)
                                      .count();
                        if (el > budget) {
                            stop.store(true);
                            return;
                        }
                    }
                }
            }
        };

        int jobs = std::max(1, in_.limits.jobs);
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }

        for (auto& res : results) {
            for (auto& w : res.witnesses)
                if (rep.witnesses.size() < in_.limits.max_witnesses)
                    rep.witnesses.push_back(std::move(w));
            rep.witnesses_found += res.found;
            rep.one_sided_hits += res.one_sided;
            rep.counts.candidates += res.counts.candidates;
            rep.counts.support_sets += res.counts.support_sets;
            rep.counts.sets_dismissed += res.counts.sets_dismissed;
            rep.counts.residual_solves += res.counts.residual_solves;
        }
        rep.exhausted = !stop.load() && kFp; // exact-grid searches never exhaust
        if (!kFp)
            rep.notes.push_back(
                "coefficient grid {1,-1}: infinite coefficient ring, window not exhaustible");
        if (stop.load()) rep.notes.push_back("time budget exceeded; partial coverage");
        if (needs_partner() && in_.kind == SearchKind::unit && one_row_ < 0)
            rep.notes.push_back("identity basis unreachable from these windows");
        rep.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    }

  private:
    // ---- setup ----

    const M& m_;
    SearchInput<M> in_;
    int n_ = 0, mw_ = 0;
    std::uint32_t p_ = 0;

    bool needs_partner() const {
        return in_.kind == SearchKind::unit || in_.kind == SearchKind::zero_divisor;
    }
    int s_min() const {
        return (in_.kind == SearchKind::unit && in_.require_non_homogeneous && kGroupLike) ? 2 : 1;
    }

    void canonicalize(std::vector<Basis>& v) {
        std::sort(v.begin(), v.end(), [&](const Basis& a, const Basis& b) { return m_.cmp(a, b) < 0; });
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    void validate() {
        if (in_.window.empty()) throw std::invalid_argument("search: empty window");
        if (in_.window.size() > in_.limits.max_window)
            throw window_cap_error("search: window size " + std::to_string(in_.window.size()) +
                                   " exceeds cap " + std::to_string(in_.limits.max_window));
        if (needs_partner() && in_.partner.size() > in_.limits.max_partner)
            throw window_cap_error("search: partner window exceeds cap");
        n_ = (int)in_.window.size();
        mw_ = (int)in_.partner.size();
        if constexpr (kFp) p_ = m_.coeff().p;
        long double per = kFp ? (long double)(p_ - 1) : 2.0L;
        long double total = 0, pw = 1;
        for (int s = 1; s <= n_; ++s) {
            pw *= per;
            long double sets = (long double)detail::choose(n_, s);
            total += sets * (in_.kind == SearchKind::idempotent ? pw : (s == 1 ? 1 : pw / per));
        }
        if (total > (long double)in_.limits.max_candidates)
            throw window_cap_error("search: candidate budget exceeded");
        if constexpr (!kFp) {
            if (std::is_same_v<typename M::CoeffRing, IntRing>)
                throw unsupported_error("search: coefficient ring must be a field (F_p or Q)");
        }
    }

    SearchReport make_report_shell() const {
        SearchReport rep;
        rep.model = m_.name();
        rep.kind = kind_name(in_.kind);
        rep.window_desc = in_.window_desc;
        rep.partner_desc = in_.partner_desc;
        rep.window_size = in_.window.size();
        rep.partner_size = in_.partner.size();
        rep.p = p_;
        rep.require_non_homogeneous = in_.require_non_homogeneous;
        rep.central_only = in_.central_only;
        rep.up_to_scalar = in_.kind != SearchKind::idempotent;
        rep.engine = engine_name();
        return rep;
    }

    std::string engine_name() const {
        if (!kFp) return "exact-grid";
        if (p_ == 2 && !in_.limits.force_generic) return "f2-bitset";
        return "generic-modp";
    }

    // ---- product tables ----
    //
    // Pair tables (unit / zero-divisor): entry lists for basis(W[i]) *
    // basis(partner[h]).  For group-like models every list has exactly one
    // entry and, within a column h, rows are distinct across i; the
    // pattern-peeling stage relies on both facts.
    //
    // Square tables (idempotent / nilpotent): entry lists for
    // basis(W[i]) * basis(W[j]).

    std::vector<Basis> rows_;
    std::unordered_map<std::string, int> row_ids_; // keyed by canonical format
    std::vector<std::int32_t> pair_off_;
    std::vector<std::int32_t> pair_row_;
    std::vector<std::uint32_t> pair_cf_;
    std::vector<CV> pair_cv_;
    std::int32_t one_row_ = -1;
    std::vector<std::int32_t> wrow_; // row id of W[k] itself (square tables)

    int intern_row(const Basis& b) {
        auto key = m_.format_basis(b); // canonical; used only at build time
        auto it = row_ids_.find(key);
        if (it != row_ids_.end()) return it->second;
        int id = (int)rows_.size();
        rows_.push_back(b);
        row_ids_.emplace(std::move(key), id);
        return id;
    }

    void build_tables() {
        rows_.clear();
        row_ids_.clear();
        pair_off_.clear();
        pair_row_.clear();
        pair_cf_.clear();
        pair_cv_.clear();
        wrow_.clear();
        one_row_ = -1;

        const bool pair_mode = needs_partner();
        const auto& right = pair_mode ? in_.partner : in_.window;
        const int cols = (int)right.size();
        if (!pair_mode) {
            // the target of u^2 = u lives on the rows of W itself
            for (int k = 0; k < n_; ++k) wrow_.push_back(intern_row(in_.window[(std::size_t)k]));
        }
        pair_off_.reserve((std::size_t)n_ * (std::size_t)cols + 1);
        pair_off_.push_back(0);
        for (int i = 0; i < n_; ++i)
            for (int h = 0; h < cols; ++h) {
                m_.mul_basis(in_.window[(std::size_t)i], right[(std::size_t)h],
                             [&](const Basis& b, const CV& c) {
                                 if (m_.coeff().is_zero(c)) return;
                                 pair_row_.push_back(intern_row(b));
                                 if constexpr (kFp) {
                                     pair_cf_.push_back(c);
                                 } else {
                                     pair_cv_.push_back(c);
                                 }
                             });
                pair_off_.push_back((std::int32_t)pair_row_.size());
            }
        if (pair_mode) {
            auto it = row_ids_.find(m_.format_basis(m_.one()));
            one_row_ = it == row_ids_.end() ? -1 : it->second;
        }
    }

    int pair_entries(int i, int h, int cols, const std::int32_t** rowp,
                     const std::uint32_t** cfp) const {
        std::size_t cell = (std::size_t)i * (std::size_t)cols + (std::size_t)h;
        int b = pair_off_[cell], e = pair_off_[cell + 1];
        *rowp = pair_row_.data() + b;
        if (cfp) *cfp = kFp ? pair_cf_.data() + b : nullptr;
        return e - b;
    }

    // ---- centrality tables (central_only) ----

    std::vector<std::vector<std::int32_t>> conj_idx_; // per generator: W index -> W index or -1

    void build_conjugation_tables() {
        if constexpr (detail::is_plain_group_ring<M>::value) {
            const auto& g = m_.backend();
            for (const auto& gen : g.generators()) {
                std::vector<std::int32_t> row((std::size_t)n_, -1);
                for (int i = 0; i < n_; ++i) {
                    auto c = conjugated(g, in_.window[(std::size_t)i], gen.g);
                    for (int j = 0; j < n_; ++j)
                        if (in_.window[(std::size_t)j] == c) {
                            row[(std::size_t)i] = j;
                            break;
                        }
                }
                conj_idx_.push_back(std::move(row));
            }
        }
    }

    // set closed under all conjugation maps; fills orbit representative slots
    bool central_set_ok(const int* S, int s, const int* pos_in_set) const {
        for (const auto& row : conj_idx_)
            for (int k = 0; k < s; ++k) {
                std::int32_t img = row[(std::size_t)S[k]];
                if (img < 0 || pos_in_set[img] < 0) return false;
            }
        return true;
    }

    template <class Val>
    bool central_assignment_ok(const int* S, int s, const int* pos_in_set,
                               const std::vector<Val>& c) const {
        for (const auto& row : conj_idx_)
            for (int k = 0; k < s; ++k) {
                int img = row[(std::size_t)S[k]];
                if (!(c[(std::size_t)k] == c[(std::size_t)pos_in_set[img]])) return false;
            }
        return true;
    }

    // ---- per-set workspace ----

    struct Workspace {
        std::vector<std::int32_t> row_deg, row_off, row_fill;
        std::vector<std::uint32_t> row_acc;
        std::vector<std::int32_t> row_entry_col, row_entry_k;
        std::vector<std::int32_t> touched;
        std::vector<std::uint8_t> col_alive;
        std::vector<std::int32_t> peel_stack;
        std::vector<std::int32_t> live_cols, live_rows;
        std::vector<std::int32_t> row_pos;
        std::vector<std::int32_t> pos_in_set;
        std::vector<std::uint32_t> cvals;
        std::vector<CV> cv_vals;
        F2Solver f2;
        DenseSolver<FpField> gen{FpField{2}};
        bool gen_ready = false;
        std::uint32_t gen_p = 0;
    };

    void ensure_ws(Workspace& ws) const {
        std::size_t R = rows_.size();
        if (ws.row_deg.size() < R) {
            ws.row_deg.assign(R, 0);
            ws.row_off.assign(R + 1, 0);
            ws.row_fill.assign(R, 0);
            ws.row_acc.assign(R, 0);
            ws.row_pos.assign(R, -1);
        }
        if (ws.col_alive.size() < (std::size_t)std::max(mw_, 1))
            ws.col_alive.assign((std::size_t)std::max(mw_, 1), 0);
        if (ws.pos_in_set.size() < (std::size_t)n_) ws.pos_in_set.assign((std::size_t)n_, -1);
        if constexpr (kFp) {
            if (!ws.gen_ready || ws.gen_p != p_) {
                ws.gen = DenseSolver<FpField>(FpField{p_});
                ws.gen_ready = true;
                ws.gen_p = p_;
            }
        }
    }

    // ---- candidate materialization / verification ----

    template <class Val>
    RingElement<M> make_x(const int* S, int s, const std::vector<Val>& c) const {
        RingElement<M> x;
        for (int k = 0; k < s; ++k) {
            if constexpr (kFp) {
                x.terms.push_back({in_.window[(std::size_t)S[k]], (CV)c[(std::size_t)k]});
            } else {
                x.terms.push_back({in_.window[(std::size_t)S[k]], c[(std::size_t)k]});
            }
        }
        return x;
    }

    template <class Val>
    RingElement<M> make_y(const std::vector<std::int32_t>& live_cols,
                          const std::vector<Val>& sol) const {
        RingElement<M> y;
        for (std::size_t t = 0; t < live_cols.size(); ++t) {
            if constexpr (kFp) {
                if (sol[t]) y.terms.push_back({in_.partner[(std::size_t)live_cols[t]], (CV)sol[t]});
            } else {
                if (!m_.coeff().is_zero(sol[t]))
                    y.terms.push_back({in_.partner[(std::size_t)live_cols[t]], sol[t]});
            }
        }
        return y;
    }

    // ---- the per-set pipeline ----

    void process_set(Workspace& ws, const int* S, int s, std::vector<WitnessRecord>& out,
                     std::uint64_t& found, std::uint64_t& one_sided, SearchCounts& counts) {
        ensure_ws(ws);
        std::uint64_t assignments = assignments_of(s);
        counts.support_sets += 1;
        counts.candidates += assignments;

        if (in_.kind == SearchKind::unit && in_.require_non_homogeneous && !kGroupLike) {
            // degree-homogeneous support sets only produce homogeneous x
            bool homog = true;
            for (int k = 1; k < s && homog; ++k)
                homog = m_.deg_equal(in_.window[(std::size_t)S[0]], in_.window[(std::size_t)S[k]]);
            if (homog) {
                counts.sets_dismissed += 1;
                return;
            }
        }

        for (int k = 0; k < s; ++k) ws.pos_in_set[(std::size_t)S[k]] = k;
        bool central_set = true;
        if (in_.central_only && detail::is_plain_group_ring<M>::value)
            central_set = central_set_ok(S, s, ws.pos_in_set.data());

        if (!central_set) {
            counts.sets_dismissed += 1;
        } else if (needs_partner()) {
            if constexpr (kGroupLike) {
                process_pair_set_peeled(ws, S, s, out, found, one_sided, counts);
            } else {
                process_pair_set_direct(ws, S, s, out, found, one_sided, counts);
            }
        } else {
            process_square_set(ws, S, s, out, found, counts);
        }
        for (int k = 0; k < s; ++k) ws.pos_in_set[(std::size_t)S[k]] = -1;
    }

    std::uint64_t assignments_of(int s) const {
        std::uint64_t per = kFp ? (std::uint64_t)(p_ - 1) : 2;
        std::uint64_t a = 1;
        int exps = in_.kind == SearchKind::idempotent ? s : s - 1;
        for (int i = 0; i < exps; ++i) a *= per;
        return a;
    }

    // odometer over normalized assignments; returns false when done.
    // values are 1..p-1 (or grid indices); slot 0 fixed at 1 unless idem.
    bool next_assignment(std::vector<std::uint32_t>& a, int s) const {
        std::uint32_t per = kFp ? p_ - 1 : 2;
        int first = in_.kind == SearchKind::idempotent ? 0 : 1;
        for (int i = s - 1; i >= first; --i) {
            if (a[(std::size_t)i] < per) {
                ++a[(std::size_t)i];
                for (int j = i + 1; j < s; ++j) a[(std::size_t)j] = 1;
                return true;
            }
        }
        return false;
    }

    CV grid_value(std::uint32_t slot) const {
        // 1 -> +1, 2 -> -1
        return slot == 1 ? m_.coeff().one() : m_.coeff().neg(m_.coeff().one());
    }

    // ---------------------------------------------------------------------
    // unit / zero-divisor, group-like models: support-pattern peeling
    // ---------------------------------------------------------------------
    //
    // Within a column h, row r = W[i]*partner[h] appears for at most one i,
    // with a nonzero structure constant; so a live row with exactly one live
    // entry forces y_h = 0 for every coefficient assignment (row target is 0
    // for all rows except the identity row in the unit search, which is
    // excluded from peeling).  Cascading this often dismisses the entire
    // support set without touching coefficients.

    void process_pair_set_peeled(Workspace& ws, const int* S, int s,
                                 std::vector<WitnessRecord>& out, std::uint64_t& found,
                                 std::uint64_t& one_sided, SearchCounts& counts) {
        const bool unit = in_.kind == SearchKind::unit;
        if (unit && one_row_ < 0) {
            counts.sets_dismissed += 1;
            return;
        }

        ws.touched.clear();
        auto touch = [&](std::int32_t r) {
            if (ws.row_deg[(std::size_t)r] == 0 && ws.row_fill[(std::size_t)r] == 0)
                ws.touched.push_back(r);
        };
        // pass 1: degrees
        const std::int32_t* rowp;
        for (int h = 0; h < mw_; ++h) {
            ws.col_alive[(std::size_t)h] = 1;
            for (int k = 0; k < s; ++k) {
                pair_entries(S[k], h, mw_, &rowp, nullptr);
                touch(*rowp);
                ws.row_deg[(std::size_t)*rowp] += 1;
            }
        }
        // prefix offsets into the row-entry arrays
        std::size_t total = (std::size_t)s * (std::size_t)mw_;
        if (ws.row_entry_col.size() < total) {
            ws.row_entry_col.resize(total);
            ws.row_entry_k.resize(total);
        }
        std::int32_t acc = 0;
        for (std::int32_t r : ws.touched) {
            ws.row_off[(std::size_t)r] = acc;
            acc += ws.row_deg[(std::size_t)r];
            ws.row_fill[(std::size_t)r] = ws.row_off[(std::size_t)r];
        }
        for (int h = 0; h < mw_; ++h)
            for (int k = 0; k < s; ++k) {
                pair_entries(S[k], h, mw_, &rowp, nullptr);
                std::int32_t r = *rowp;
                ws.row_entry_col[(std::size_t)ws.row_fill[(std::size_t)r]] = h;
                ws.row_entry_k[(std::size_t)ws.row_fill[(std::size_t)r]] = k;
                ws.row_fill[(std::size_t)r] += 1;
            }

        // peel
        ws.peel_stack.clear();
        for (std::int32_t r : ws.touched)
            if (ws.row_deg[(std::size_t)r] == 1 && !(unit && r == one_row_))
                ws.peel_stack.push_back(r);
        int live_cols = mw_;
        while (!ws.peel_stack.empty()) {
            std::int32_t r = ws.peel_stack.back();
            ws.peel_stack.pop_back();
            if (ws.row_deg[(std::size_t)r] != 1) continue;
            // find the single live entry of r
            int h = -1;
            for (std::int32_t t = ws.row_off[(std::size_t)r]; t < ws.row_fill[(std::size_t)r]; ++t)
                if (ws.col_alive[(std::size_t)ws.row_entry_col[(std::size_t)t]]) {
                    h = ws.row_entry_col[(std::size_t)t];
                    break;
                }
            if (h < 0) continue; // stale
            // kill column h
            ws.col_alive[(std::size_t)h] = 0;
            --live_cols;
            for (int k = 0; k < s; ++k) {
                pair_entries(S[k], h, mw_, &rowp, nullptr);
                std::int32_t r2 = *rowp;
                if (--ws.row_deg[(std::size_t)r2] == 1 && !(unit && r2 == one_row_))
                    ws.peel_stack.push_back(r2);
            }
        }

        bool dismiss = live_cols == 0 || (unit && ws.row_deg[(std::size_t)one_row_] == 0);
        if (!dismiss) {
            ws.live_cols.clear();
            for (int h = 0; h < mw_; ++h)
                if (ws.col_alive[(std::size_t)h]) ws.live_cols.push_back(h);
            ws.live_rows.clear();
            for (std::int32_t r : ws.touched)
                if (ws.row_deg[(std::size_t)r] > 0) ws.live_rows.push_back(r);
            std::sort(ws.live_rows.begin(), ws.live_rows.end());
            solve_residual_over_assignments(ws, S, s, out, found, one_sided, counts);
        } else {
            counts.sets_dismissed += 1;
        }

        for (std::int32_t r : ws.touched) {
            ws.row_deg[(std::size_t)r] = 0;
            ws.row_fill[(std::size_t)r] = 0;
        }
    }

    template <class Solver, class Val>
    void residual_pass(Workspace& ws, Solver& solver, const int* S, int s,
                       const std::vector<Val>& cvals, std::vector<WitnessRecord>& out,
                       std::uint64_t& found, std::uint64_t& one_sided, SearchCounts& counts) {
        const bool unit = in_.kind == SearchKind::unit;
        int R = (int)ws.live_rows.size();
        int C = (int)ws.live_cols.size();
        for (int t = 0; t < R; ++t) ws.row_pos[(std::size_t)ws.live_rows[(std::size_t)t]] = t;
        solver.reset(R, C);
        const std::int32_t* rowp;
        const std::uint32_t* cfp;
        for (int cpos = 0; cpos < C; ++cpos) {
            int h = ws.live_cols[(std::size_t)cpos];
            for (int k = 0; k < s; ++k) {
                int cnt = pair_entries(S[k], h, mw_, &rowp, &cfp);
                for (int t = 0; t < cnt; ++t) {
                    std::int32_t rp = ws.row_pos[(std::size_t)rowp[t]];
                    if (rp < 0) continue; // row died entirely (peeled cols only)
                    if constexpr (kFp) {
                        solver.add(rp, cpos,
                                   (Val)((std::uint64_t)cvals[(std::size_t)k] * cfp[t] % p_));
                    } else {
                        std::size_t cell =
                            (std::size_t)S[k] * (std::size_t)mw_ + (std::size_t)h;
                        solver.add(rp, cpos,
                                   m_.coeff().mul(cvals[(std::size_t)k],
                                                  pair_cv_[(std::size_t)pair_off_[cell] +
                                                           (std::size_t)t]));
                    }
                }
            }
        }
        if (unit) {
            std::int32_t rp = ws.row_pos[(std::size_t)one_row_];
            if (rp >= 0) solver.add_target(rp, unit_target<Val>());
        }
        solver.rref();
        counts.residual_solves += 1;

        if (unit) {
            if (solver.consistent()) {
                auto sol = solver.solution();
                auto x = make_x(S, s, cvals);
                auto y = make_y(ws.live_cols, sol);
                auto xy = re_mul(m_, x, y);
                if (!(xy == re_one(m_)))
                    throw theorem_alarm("search_units: solver produced a non-inverse");
                auto yx = re_mul(m_, y, x);
                if (yx == re_one(m_)) {
                    found += 1;
                    if (out.size() < in_.limits.max_witnesses)
                        out.push_back({to_string(m_, x), to_string(m_, y), "two-sided inverse"});
                } else {
                    one_sided += 1;
                }
            }
        } else {
            if (solver.has_kernel()) {
                auto basis = solver.kernel_basis(in_.limits.max_witnesses);
                found += solver.kernel_dim();
                auto x = make_x(S, s, cvals);
                std::size_t idx = 0;
                for (auto& kv : basis) {
                    auto y = make_y(ws.live_cols, kv);
                    auto xy = re_mul(m_, x, y);
                    if (!(xy.is_zero()) || y.is_zero())
                        throw theorem_alarm("search_zero_divisors: kernel vector fails x*y = 0");
                    if (out.size() < in_.limits.max_witnesses)
                        out.push_back({to_string(m_, x), to_string(m_, y),
                                       "kernel dim " + std::to_string(solver.kernel_dim()) +
                                           ", basis " + std::to_string(idx)});
                    ++idx;
                }
            }
        }
        for (int t = 0; t < R; ++t) ws.row_pos[(std::size_t)ws.live_rows[(std::size_t)t]] = -1;
    }

    template <class Val>
    Val unit_target() const {
        if constexpr (kFp) {
            return 1;
        } else {
            return m_.coeff().one();
        }
    }

    void solve_residual_over_assignments(Workspace& ws, const int* S, int s,
                                         std::vector<WitnessRecord>& out, std::uint64_t& found,
                                         std::uint64_t& one_sided, SearchCounts& counts) {
        ws.cvals.assign((std::size_t)s, 1);
        const bool plain_central =
            in_.central_only && detail::is_plain_group_ring<M>::value;
        const bool direct_central = in_.central_only && !detail::is_plain_group_ring<M>::value;
        do {
            if constexpr (kFp) {
                if (plain_central &&
                    !central_assignment_ok(S, s, ws.pos_in_set.data(), ws.cvals))
                    continue;
                if (direct_central && !is_central(m_, make_x(S, s, ws.cvals))) continue;
                if (p_ == 2 && !in_.limits.force_generic) {
                    residual_pass<F2Solver, std::uint32_t>(ws, ws.f2, S, s, ws.cvals, out, found,
                                                           one_sided, counts);
                } else {
                    residual_pass<DenseSolver<FpField>, std::uint32_t>(ws, ws.gen, S, s, ws.cvals,
                                                                       out, found, one_sided,
                                                                       counts);
                }
            } else {
                ws.cv_vals.clear();
                for (int k = 0; k < s; ++k) ws.cv_vals.push_back(grid_value(ws.cvals[(std::size_t)k]));
                if (in_.central_only && !is_central(m_, make_x(S, s, ws.cv_vals))) continue;
                DenseSolver<ExactField<typename M::CoeffRing>> solver(
                    ExactField<typename M::CoeffRing>{m_.coeff()});
                residual_pass<decltype(solver), CV>(ws, solver, S, s, ws.cv_vals, out, found,
                                                    one_sided, counts);
            }
        } while (next_assignment(ws.cvals, s));
    }

    // ---------------------------------------------------------------------
    // unit / zero-divisor without peeling (Weyl): dense per-assignment build
    // ---------------------------------------------------------------------

    void process_pair_set_direct(Workspace& ws, const int* S, int s,
                                 std::vector<WitnessRecord>& out, std::uint64_t& found,
                                 std::uint64_t& one_sided, SearchCounts& counts) {
        const bool unit = in_.kind == SearchKind::unit;
        if (unit && one_row_ < 0) {
            counts.sets_dismissed += 1;
            return;
        }
        // all rows reachable from this support set
        ws.touched.clear();
        const std::int32_t* rowp;
        for (int h = 0; h < mw_; ++h)
            for (int k = 0; k < s; ++k) {
                int cnt = pair_entries(S[k], h, mw_, &rowp, nullptr);
                for (int t = 0; t < cnt; ++t)
                    if (ws.row_deg[(std::size_t)rowp[t]]++ == 0) ws.touched.push_back(rowp[t]);
            }
        ws.live_rows = ws.touched;
        std::sort(ws.live_rows.begin(), ws.live_rows.end());
        if (unit && ws.row_deg[(std::size_t)one_row_] == 0) {
            counts.sets_dismissed += 1;
        } else {
            ws.live_cols.clear();
            for (int h = 0; h < mw_; ++h) ws.live_cols.push_back(h);
            solve_residual_over_assignments(ws, S, s, out, found, one_sided, counts);
        }
        for (std::int32_t r : ws.touched) ws.row_deg[(std::size_t)r] = 0;
    }

    // ---------------------------------------------------------------------
    // idempotent / nilpotent: row constraints of u*u = target(u)
    // ---------------------------------------------------------------------
    //
    // A row reachable by exactly one (i, j, term) contribution has value
    // c_i c_j tau != 0 for every assignment; if the row's target is
    // structurally zero (outside S, or always for nilpotency) the whole
    // support set is impossible.

    void process_square_set(Workspace& ws, const int* S, int s, std::vector<WitnessRecord>& out,
                            std::uint64_t& found, SearchCounts& counts) {
        const bool idem = in_.kind == SearchKind::idempotent;
        ws.touched.clear();
        const std::int32_t* rowp;
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b) {
                int cnt = pair_entries(S[a], S[b], n_, &rowp, nullptr);
                for (int t = 0; t < cnt; ++t)
                    if (ws.row_deg[(std::size_t)rowp[t]]++ == 0) ws.touched.push_back(rowp[t]);
            }

        bool dead = false;
        if (idem) {
            // every supported basis index must be reachable as a product row
            for (int k = 0; k < s && !dead; ++k)
                if (ws.row_deg[(std::size_t)wrow_[(std::size_t)S[k]]] == 0) dead = true;
        }
        if (!dead) {
            for (std::int32_t r : ws.touched) {
                if (ws.row_deg[(std::size_t)r] != 1) continue;
                bool target_zero = true;
                if (idem) {
                    for (int k = 0; k < s; ++k)
                        if (wrow_[(std::size_t)S[k]] == r) target_zero = false;
                }
                if (target_zero) {
                    dead = true;
                    break;
                }
            }
        }
        if (dead) {
            counts.sets_dismissed += 1;
            for (std::int32_t r : ws.touched) ws.row_deg[(std::size_t)r] = 0;
            return;
        }

        ws.live_rows = ws.touched;
        std::sort(ws.live_rows.begin(), ws.live_rows.end());
        for (std::int32_t r : ws.touched) ws.row_deg[(std::size_t)r] = 0;

        // enumerate assignments and evaluate the square row by row
        ws.cvals.assign((std::size_t)s, 1);
        const bool plain_central =
            in_.central_only && detail::is_plain_group_ring<M>::value;
        do {
            counts.residual_solves += 1;
            if constexpr (kFp) {
                if (plain_central &&
                    !central_assignment_ok(S, s, ws.pos_in_set.data(), ws.cvals))
                    continue;
                if (in_.central_only && !detail::is_plain_group_ring<M>::value &&
                    !is_central(m_, make_x(S, s, ws.cvals)))
                    continue;
                if (square_matches(ws, S, s)) emit_square_witness(ws, S, s, out, found);
            } else {
                ws.cv_vals.clear();
                for (int k = 0; k < s; ++k)
                    ws.cv_vals.push_back(grid_value(ws.cvals[(std::size_t)k]));
                if (in_.central_only && !is_central(m_, make_x(S, s, ws.cv_vals))) continue;
                auto x = make_x(S, s, ws.cv_vals);
                auto sq = re_mul(m_, x, x);
                bool ok = idem ? (sq == x) : sq.is_zero();
                if (ok) emit_square_witness(ws, S, s, out, found);
            }
        } while (next_assignment(ws.cvals, s));
    }

    bool square_matches(Workspace& ws, const int* S, int s) {
        const bool idem = in_.kind == SearchKind::idempotent;
        // accumulate (u*u)_r over live rows, compare with target
        const std::int32_t* rowp;
        const std::uint32_t* cfp;
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b) {
                std::uint64_t cc =
                    (std::uint64_t)ws.cvals[(std::size_t)a] * ws.cvals[(std::size_t)b] % p_;
                int cnt = pair_entries(S[a], S[b], n_, &rowp, &cfp);
                for (int t = 0; t < cnt; ++t) {
                    std::uint32_t& acc = ws.row_acc[(std::size_t)rowp[t]];
                    acc = (std::uint32_t)((acc + cc * cfp[t]) % p_);
                }
            }
        bool ok = true;
        for (std::int32_t r : ws.live_rows) {
            std::uint32_t want = 0;
            if (idem) {
                for (int k = 0; k < s; ++k)
                    if (wrow_[(std::size_t)S[k]] == r) want = ws.cvals[(std::size_t)k];
            }
            if (ws.row_acc[(std::size_t)r] != want) {
                ok = false;
                break;
            }
        }
        for (std::int32_t r : ws.live_rows) ws.row_acc[(std::size_t)r] = 0;
        return ok;
    }

    void emit_square_witness(Workspace& ws, const int* S, int s, std::vector<WitnessRecord>& out,
                             std::uint64_t& found) {
        RingElement<M> x;
        if constexpr (kFp) {
            x = make_x(S, s, ws.cvals);
        } else {
            x = make_x(S, s, ws.cv_vals);
        }
        auto sq = re_mul(m_, x, x);
        if (in_.kind == SearchKind::idempotent) {
            if (!(sq == x)) throw theorem_alarm("search_idempotents: witness fails u^2 = u");
            if (x == re_one(m_)) return; // trivial
            found += 1;
            if (out.size() < in_.limits.max_witnesses)
                out.push_back({to_string(m_, x), "", "nontrivial idempotent"});
        } else {
            if (!sq.is_zero()) throw theorem_alarm("search_nilpotents: witness fails u^2 = 0");
            found += 1;
            if (out.size() < in_.limits.max_witnesses)
                out.push_back({to_string(m_, x), "", "square zero"});
        }
    }
};

// convenience front ends

template <class M>
SearchReport search_units(const M& m, SearchInput<M> in) {
    in.kind = SearchKind::unit;
    return SearchEngine<M>(m, std::move(in)).run();
}
template <class M>
SearchReport search_zero_divisors(const M& m, SearchInput<M> in) {
    in.kind = SearchKind::zero_divisor;
    return SearchEngine<M>(m, std::move(in)).run();
}
template <class M>
SearchReport search_idempotents(const M& m, SearchInput<M> in) {
    in.kind = SearchKind::idempotent;
    return SearchEngine<M>(m, std::move(in)).run();
}
template <class M>
SearchReport search_nilpotents(const M& m, SearchInput<M> in) {
    in.kind = SearchKind::nilpotent;
    return SearchEngine<M>(m, std::move(in)).run();
}

} // namespace grlab
