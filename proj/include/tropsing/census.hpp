#pragma once
// Singularity census of the planar shadow of a sparse spatial curve.
//
// A pair of trivariate supports cuts out a curve in 3-space; projecting along
// the first coordinate gives a plane curve.  This header classifies the
// singular points of that shadow: ordinary multiple points where several
// sheets cross, unibranch points contributed by the extreme exponents, and
// the residual ordinary double points.  Each class is counted exactly by a
// mixed volume of support fibers, and the double-point count is recovered by
// subtracting the classified contributions from the total delta budget.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "tropsing/decomp.hpp"
#include "tropsing/delta.hpp"
#include "tropsing/errors.hpp"
#include "tropsing/lattice.hpp"
#include "tropsing/polytope.hpp"
#include "tropsing/ultratrop.hpp"

namespace tropsing {

// ---------------------------------------------------------------------------
// Fibered view of a trivariate support pair
// ---------------------------------------------------------------------------

// First-coordinate exponents of each support together with the fiber over
// every exponent, recorded as planar point sets in the last two coordinates.
struct FiberedSupports {
    BSet b1, b2;
    std::vector<std::vector<VecI>> fibers1, fibers2;  // aligned with b1 / b2

    const std::vector<VecI>& fiber1(const Int& b) const { return lookup(b1, fibers1, b); }
    const std::vector<VecI>& fiber2(const Int& b) const { return lookup(b2, fibers2, b); }

  private:
    static const std::vector<VecI>& lookup(const BSet& b,
                                           const std::vector<std::vector<VecI>>& fibers,
                                           const Int& v) {
        auto it = std::lower_bound(b.begin(), b.end(), v);
        internal_check(it != b.end() && *it == v, "fiber lookup outside the exponent set");
        return fibers[static_cast<size_t>(it - b.begin())];
    }
};

// Splits a trivariate support into its first-coordinate exponent set and the
// planar fibers over each exponent.
inline FiberedSupports project_supports(const SupportSet& a1, const SupportSet& a2) {
    if (a1.dim != 3 || a2.dim != 3)
        throw DimensionUnsupported("projection census requires three-dimensional supports");
    FiberedSupports out;
    auto split = [](const SupportSet& a, BSet& b, std::vector<std::vector<VecI>>& fibers) {
        std::vector<Int> firsts;
        for (const VecI& p : a.points) firsts.push_back(p[0]);
        std::sort(firsts.begin(), firsts.end());
        firsts.erase(std::unique(firsts.begin(), firsts.end()), firsts.end());
        b = firsts;
        fibers.assign(b.size(), {});
        for (const VecI& p : a.points) {
            auto it = std::lower_bound(b.begin(), b.end(), p[0]);
            fibers[static_cast<size_t>(it - b.begin())].push_back(VecI{p[1], p[2]});
        }
        for (auto& f : fibers) std::sort(f.begin(), f.end());
    };
    split(a1, out.b1, out.fibers1);
    split(a2, out.b2, out.fibers2);
    return out;
}

// ---------------------------------------------------------------------------
// Singularity kinds
// ---------------------------------------------------------------------------

// Local type of a singular point of the shadow curve: either an ordinary
// point of some multiplicity (that many pairwise transversal smooth branches)
// or a unibranch point parametrized by a pair of sparse exponent sets.
struct SingularityKind {
    bool ordinary = true;
    Int m = 0;       // multiplicity when ordinary
    BSet b1, b2;     // local exponent sets when unibranch (positive entries)
    Int delta = 0;   // delta invariant of one point of this kind

    bool operator==(const SingularityKind&) const = default;
};

inline SingularityKind ordinary_kind(const Int& m) {
    internal_check(m >= 2, "ordinary singular point needs multiplicity at least 2");
    SingularityKind k;
    k.ordinary = true;
    k.m = m;
    k.delta = m * (m - 1) / 2;
    return k;
}

// Unibranch kind for the germ (t^{b1}, t^{b2}); zero exponents are dropped.
inline SingularityKind sparse_kind(const BSet& b1, const BSet& b2) {
    SingularityKind k;
    k.ordinary = false;
    k.b1 = deltadetail::positive_part(b1);
    k.b2 = deltadetail::positive_part(b2);
    k.delta = delta_sparse(b1, b2).delta;
    return k;
}

// One census line: how many singular points of a given kind the shadow has,
// and which counting rule (1-5) produced the line.
struct CensusEntry {
    int source = 0;
    SingularityKind kind;
    Int count = 0;

    bool operator==(const CensusEntry&) const = default;
};

// Full classification of the singular points of the shadow curve.
struct SingularityCensus {
    FiberedSupports supports;
    ThsumReport budget;               // total delta budget and its derivation
    std::vector<CensusEntry> entries; // one line per kind with a positive count
    Int nodes = 0;                    // residual ordinary double points
    Int total_delta = 0;              // equals budget.total
    Polygon2 newton_polygon;          // of the shadow curve
};

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

namespace censusdetail {

// Mixed area of the convex hulls of two planar point sets, computed in the
// saturation of the sublattice they span; degenerate pairs count zero.
inline Int fiber_mixed_area(const std::vector<VecI>& f, const std::vector<VecI>& g) {
    return sublattice_mixed_volume({convex_hull_int(f, 2), convex_hull_int(g, 2)}, 2);
}

inline Polytope hull3(const std::vector<VecI>& pts) { return convex_hull_int(pts, 3); }

// Points of a support whose first coordinate lies in the given exponent set.
inline std::vector<VecI> restrict_first(const SupportSet& a, const BSet& allowed) {
    std::vector<VecI> out;
    for (const VecI& p : a.points)
        if (std::binary_search(allowed.begin(), allowed.end(), p[0])) out.push_back(p);
    return out;
}

// True when some exponent set contains its minimum plus one; the lowest-order
// branches are then smooth and transversal, so the low end contributes no
// singular point.  (Mirrored for the high end via negated exponents.)
inline bool low_end_smooth(const BSet& b1, const BSet& b2) {
    for (const BSet* b : {&b1, &b2}) {
        Int want = b->front() + 1;
        if (std::binary_search(b->begin(), b->end(), want)) return true;
    }
    return false;
}

inline BSet shifted_to_zero(const BSet& b) {
    BSet out;
    for (const Int& v : b) out.push_back(v - b.front());
    return out;
}

inline BSet reflected_to_zero(const BSet& b) {
    BSet out;
    for (auto it = b.rbegin(); it != b.rend(); ++it) out.push_back(b.back() - *it);
    return out;
}

} // namespace censusdetail

// ---------------------------------------------------------------------------
// The census
// ---------------------------------------------------------------------------

// Newton polygon of the shadow curve: the mixed fiber polygon of the two
// support hulls over the first coordinate.
inline Polygon2 newton_polygon_of_projection(const SupportSet& a1, const SupportSet& a2) {
    if (a1.dim != 3 || a2.dim != 3)
        throw DimensionUnsupported("projection census requires three-dimensional supports");
    Polytope p1 = polytope_of_support(a1);
    Polytope p2 = polytope_of_support(a2);
    if (!minkowski_sum(p1, p2).full_dim())
        throw NotFullDimensional("support sum must be three-dimensional");
    return mixed_fiber_polygon(p1, p2, 0);
}

// Classifies and counts every singular point of the shadow curve.
inline SingularityCensus census(const SupportSet& a1, const SupportSet& a2) {
    SingularityCensus out;
    out.supports = project_supports(a1, a2);
    const BSet& b1 = out.supports.b1;
    const BSet& b2 = out.supports.b2;
    require_not_exceptional(b1, b2);

    // The delta budget validates the standing assumptions (unit lattice index,
    // no thin subtuple, full-dimensional support sum) as a side effect.
    out.budget = thsum_report(a1, a2);
    out.total_delta = out.budget.total;
    out.newton_polygon = mixed_fiber_polygon(polytope_of_support(a1), polytope_of_support(a2), 0);

    using namespace censusdetail;

    // Rule 1: an exponent set splitting into two classes modulo m makes the
    // sheets meet in ordinary m-fold points; the count is the mixed volume of
    // the untouched support with the two restricted halves, divided by m.
    for (const MDecomposition& dec : find_m_decompositions(b1, b2)) {
        const SupportSet& split_support = dec.which == 1 ? a1 : a2;
        const SupportSet& other_support = dec.which == 1 ? a2 : a1;
        Int mv = mixed_volume({hull3(other_support.points),
                               hull3(restrict_first(split_support, dec.part1)),
                               hull3(restrict_first(split_support, dec.part2))});
        internal_check(mv % dec.m == 0,
                       "split-sheet mixed volume must be divisible by the multiplicity");
        Int count = mv / dec.m;
        if (count > 0) out.entries.push_back({1, ordinary_kind(dec.m), count});
    }

    // Rule 2: a two-element exponent set folds its two sheets together over
    // finitely many points, where the other equation brings all of its sheets
    // through one ordinary point.
    for (int i = 1; i <= 2; ++i) {
        const BSet& bi = i == 1 ? b1 : b2;
        const BSet& bo = i == 1 ? b2 : b1;
        if (bi.size() != 2) continue;
        Int span_other = bo.back() - bo.front();
        if (span_other <= 1) continue;
        const auto& lo = i == 1 ? out.supports.fiber1(bi.front()) : out.supports.fiber2(bi.front());
        const auto& hi = i == 1 ? out.supports.fiber1(bi.back()) : out.supports.fiber2(bi.back());
        Int count = fiber_mixed_area(lo, hi);
        if (count > 0) out.entries.push_back({2, ordinary_kind(span_other), count});
    }

    // Rule 3: where both coordinates vanish to their lowest order the shadow
    // has unibranch points whose local exponents are the shifted supports;
    // the count is the mixed area of the two lowest fibers.
    if (!low_end_smooth(b1, b2)) {
        Int count = fiber_mixed_area(out.supports.fiber1(b1.front()),
                                     out.supports.fiber2(b2.front()));
        if (count > 0)
            out.entries.push_back(
                {3, sparse_kind(shifted_to_zero(b1), shifted_to_zero(b2)), count});
    }

    // Rule 4: the same at the highest order, with exponents reflected.
    {
        BSet r1 = reflected_to_zero(b1), r2 = reflected_to_zero(b2);
        if (!low_end_smooth(r1, r2)) {
            Int count = fiber_mixed_area(out.supports.fiber1(b1.back()),
                                         out.supports.fiber2(b2.back()));
            if (count > 0) out.entries.push_back({4, sparse_kind(r1, r2), count});
        }
    }

    // Rule 5: twin three-element exponent sets (equal up to a shift) make the
    // sheets of the two equations interleave; the count is the mixed volume
    // of three fiberwise joins, each fiber pair lifted to distinct heights.
    if (b1.size() == 3 && b2.size() == 3 && shifted_to_zero(b1) == shifted_to_zero(b2)) {
        std::vector<Polytope> joins;
        for (size_t j = 0; j < 3; ++j) {
            std::vector<VecI> lifted;
            for (const VecI& p : out.supports.fiber1(b1[j]))
                lifted.push_back(VecI{p[0], p[1], Int(0)});
            for (const VecI& p : out.supports.fiber2(b2[j]))
                lifted.push_back(VecI{p[0], p[1], Int(1)});
            joins.push_back(hull3(lifted));
        }
        Int count = mixed_volume(joins);
        if (count > 0)
            out.entries.push_back({5, ordinary_kind(b1.back() - b1.front()), count});
    }

    // Rule 6: every remaining singular point is an ordinary double point, and
    // the total delta budget pins down how many there are.
    Int classified = 0;
    for (const CensusEntry& e : out.entries) classified += e.count * e.kind.delta;
    out.nodes = out.total_delta - classified;
    if (out.nodes < 0)
        throw NegativeNodeCount("classified singular points exceed the delta budget by " +
                                to_string(Int(classified - out.total_delta)));
    return out;
}

// Total delta budget of the shadow curve.
inline Int total_delta(const SupportSet& a1, const SupportSet& a2) {
    return thsum_total(a1, a2);
}

} // namespace tropsing
