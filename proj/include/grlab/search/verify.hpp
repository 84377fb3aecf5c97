#pragma once

#include "grlab/ring/element.hpp"
#include "grlab/search/report.hpp"

namespace grlab {

// Certification of externally supplied witness candidates: recomputes the
// products exactly and reports the verdict together with the normalized
// products, so a false claim shows what the product actually is.
template <class M>
struct VerifyResult {
    bool ok = false;
    RingElement<M> xy, yx;
};

template <class M>
VerifyResult<M> verify_identity(const M& m, const RingElement<M>& x, const RingElement<M>& y,
                                SearchKind kind) {
    VerifyResult<M> res;
    switch (kind) {
        case SearchKind::unit:
            res.xy = re_mul(m, x, y);
            res.yx = re_mul(m, y, x);
            res.ok = res.xy == re_one(m) && res.yx == re_one(m);
            break;
        case SearchKind::zero_divisor:
            res.xy = re_mul(m, x, y);
            res.ok = !x.is_zero() && !y.is_zero() && res.xy.is_zero();
            break;
        case SearchKind::idempotent:
            res.xy = re_mul(m, x, x);
            res.ok = res.xy == x;
            break;
        case SearchKind::nilpotent:
            res.xy = re_mul(m, x, x);
            res.ok = !x.is_zero() && res.xy.is_zero();
            break;
    }
    return res;
}

} // namespace grlab
