#pragma once

#include "grlab/search/engine.hpp"

namespace grlab {

// Runs all four searches on one window and asserts the window-scale shadow
// of the unit => reduced => domain => idempotent chain: if no
// non-homogeneous unit was found, then no nilpotent, no zero-divisor pair
// and no nontrivial idempotent may be found either.  On a torsion-free
// grading a violation is a hard failure (theorem alarm); on torsion
// controls it is flagged, since the chain's hypotheses exclude them.
struct HierarchyOutcome {
    SearchReport units, nilpotents, zero_divisors, idempotents;
    bool consistent = true;
    std::string flag;
};

template <class M>
HierarchyOutcome hierarchy_suite(const M& m, const SearchInput<M>& base) {
    HierarchyOutcome out;
    auto in = base;
    in.require_non_homogeneous = true;
    in.kind = SearchKind::unit;
    out.units = SearchEngine<M>(m, in).run();
    in.require_non_homogeneous = base.require_non_homogeneous;
    in.kind = SearchKind::nilpotent;
    out.nilpotents = SearchEngine<M>(m, in).run();
    in.kind = SearchKind::zero_divisor;
    out.zero_divisors = SearchEngine<M>(m, in).run();
    in.kind = SearchKind::idempotent;
    out.idempotents = SearchEngine<M>(m, in).run();

    bool downstream = out.nilpotents.witnesses_found > 0 ||
                      out.zero_divisors.witnesses_found > 0 ||
                      out.idempotents.witnesses_found > 0;
    if (out.units.witnesses_found == 0 && downstream) {
        out.consistent = false;
        if (m.grading_torsion_free())
            throw theorem_alarm(
                "hierarchy suite: downstream witnesses without a non-homogeneous unit on a "
                "torsion-free grading (" +
                m.name() + ")");
        out.flag = "hierarchy hypotheses violated: torsion grading";
    }
    return out;
}

} // namespace grlab
