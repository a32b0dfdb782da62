#pragma once

// Tangency machinery for spatial curves cut out by two sparse surfaces:
// direction extensions of base directions, nested-boxes tangency matrices
// along each extension, the three matrix-sum conventions, and the assembled
// total-delta formula for the projection to the last two coordinates.

#include <string>
#include <utility>
#include <vector>

#include "tropsing/errors.hpp"
#include "tropsing/lattice.hpp"
#include "tropsing/polytope.hpp"
#include "tropsing/rational.hpp"

namespace tropsing {

// ---------------------------------------------------------------------------
// Assumptions
// ---------------------------------------------------------------------------

struct AssumptionReport {
    bool full_index = false;      // horizontal projection of the difference
                                  // lattice is all of Z^n
    LatticeIndex horizontal_index;
    bool no_thin_subtuple = true; // no subtuple fits, up to translation, in a
                                  // subspace of its own size containing the
                                  // horizontal kernel
    std::string detail;

    bool pass() const { return full_index && no_thin_subtuple; }
};

// Diagnostics for the two structural hypotheses of the tangency machinery:
// (a) the tuple's difference lattice projects onto a finite-index-1 subgroup
// of Z^n; (b) no proper subtuple can be translated into a coordinate-kernel-
// containing subspace of dimension equal to its size.
inline AssumptionReport check_assumptions(const std::vector<SupportSet>& as, int k) {
    if (as.empty()) throw SchemaError("assumption check of empty tuple");
    const int dim = as.front().dim;
    const int n = dim - k;
    if (n <= 0 || k <= 0) throw SchemaError("invalid horizontal/vertical split");

    AssumptionReport rep;
    rep.horizontal_index = vertical_index(as, k);
    rep.full_index = rep.horizontal_index.is_one();
    if (!rep.full_index) rep.detail = "horizontal difference index is " +
                                      to_string(rep.horizontal_index);

    const size_t m = as.size();
    for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {  // nonempty proper
        std::vector<VecI> gens;
        int count = 0;
        for (size_t i = 0; i < m; ++i) {
            if (!((mask >> i) & 1)) continue;
            ++count;
            for (size_t p = 1; p < as[i].points.size(); ++p)
                gens.push_back(sub(as[i].points[p], as[i].points[0]));
        }
        // adjoin the horizontal kernel directions e_1..e_n
        for (int j = 0; j < n; ++j) {
            VecI e(dim, Int(0));
            e[j] = 1;
            gens.push_back(std::move(e));
        }
        if (lattice_rank(gens) <= count) {
            rep.no_thin_subtuple = false;
            if (!rep.detail.empty()) rep.detail += "; ";
            rep.detail += "subtuple mask " + std::to_string(mask) +
                          " spans too small a subspace with the horizontal kernel";
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Direction extensions
// ---------------------------------------------------------------------------

// Facet normals of the Minkowski sum of the hulls whose last-k coordinates
// equal `delta` exactly.
inline std::vector<Covector> direction_extensions(const std::vector<SupportSet>& as,
                                                  const Covector& delta) {
    if (as.empty()) throw SchemaError("direction extensions of empty tuple");
    const int dim = as.front().dim;
    const int k = static_cast<int>(delta.coords.size());
    if (k <= 0 || k >= dim) throw SchemaError("base dimension out of range");
    if (!delta.is_primitive()) throw SchemaError("base direction must be primitive");

    Polytope sum = polytope_of_support(as.front());
    for (size_t i = 1; i < as.size(); ++i)
        sum = minkowski_sum(sum, polytope_of_support(as[i]));
    if (!sum.full_dim())
        throw NotFullDimensional("direction extensions need a full-dimensional sum");

    std::vector<Covector> out;
    for (const PolyFacet& f : sum.facets) {
        bool match = true;
        for (int j = 0; j < k; ++j)
            if (f.normal[dim - k + j] != delta.coords[j]) match = false;
        if (match) out.push_back(Covector(f.normal));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Nested-boxes tangency matrices
// ---------------------------------------------------------------------------

struct TangencyBlock {
    Covector gamma;
    Int size = 0;               // crop mixed volume = number of elements
    IotaSequence iota;
    std::vector<std::vector<Int>> kappa;  // symmetric, zero diagonal

    // plain entry sum of the matrix
    Int entry_sum() const {
        Int s = 0;
        for (const auto& row : kappa)
            for (const Int& e : row) s += e;
        return s;
    }
    // entry sum after lowering every off-diagonal entry by one (equivalently
    // size * sum(i_d - 1) over the index sequence)
    Int calibrated_sum() const {
        Int offdiag = size * (size - 1);
        return entry_sum() - offdiag;
    }
    // the closed-form expression i_1 * sum_d (i_d - 1)
    Int closed_form() const {
        if (iota.values.empty()) return 0;
        Int acc = 0;
        for (const Int& i : iota.values) acc += i - 1;
        return iota.values.front() * acc;
    }
};

// Relation-depth matrix of s elements addressed through the box hierarchy of
// a stabilized index sequence: element r sits in box r/i_{d+1} at level d and
// the (p,r) entry is 1 + (first level whose boxes separate p and r).
inline std::vector<std::vector<Int>> kappa_matrix(const Int& s, const IotaSequence& iota) {
    internal_check(s >= 0, "negative block size");
    internal_check(!iota.values.empty() && iota.values.back() == 1,
                   "index sequence must stabilize at 1");
    if (s > 0)
        internal_check(s % iota.values.front() == 0,
                       "block size must be divisible by the leading index");
    const long long n = to_int64(s);
    const size_t levels = iota.values.size();
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    for (long long p = 0; p < n; ++p) {
        for (long long r = p + 1; r < n; ++r) {
            Int depth = 0;
            for (size_t d = 0; d < levels; ++d) {
                if (Int(p) / iota.values[d] != Int(r) / iota.values[d]) {
                    depth = Int(static_cast<long long>(d) + 1);
                    break;
                }
            }
            internal_check(depth > 0, "box addressing failed to separate elements");
            m[p][r] = depth;
            m[r][p] = depth;
        }
    }
    return m;
}

// Depth-0 crops of the tuple in direction gamma, as polytopes.
inline std::vector<Polytope> crop_polytopes(const std::vector<SupportSet>& as,
                                            const Covector& gamma) {
    std::vector<Polytope> faces;
    for (const SupportSet& a : as)
        faces.push_back(polytope_of_support(crop(a, gamma, Int(0))));
    return faces;
}

// Mixed volume of the depth-0 crops in the sublattice they jointly span; the
// number of branch representatives along gamma.
inline Int crop_mixed_volume(const std::vector<SupportSet>& as, const Covector& gamma) {
    if (as.empty()) throw SchemaError("crop mixed volume of empty tuple");
    return sublattice_mixed_volume(crop_polytopes(as, gamma), as.front().dim);
}

// Assemble the tangency block for one extension gamma. The crop mixed volume
// must be positive (zero-size blocks are skipped by callers) and the index
// sequence finite.
inline TangencyBlock nested_boxes_matrix(const std::vector<SupportSet>& as,
                                         const Covector& gamma, int k) {
    TangencyBlock b;
    b.gamma = gamma;
    b.size = crop_mixed_volume(as, gamma);
    b.iota = iota_sequence(as, gamma, k);
    if (b.iota.infinite_prefix > 0)
        throw InfiniteIndex("index sequence along (" + to_string(gamma.coords) +
                            ") starts with rank-deficient crops");
    b.kappa = kappa_matrix(b.size, b.iota);
    return b;
}

// ---------------------------------------------------------------------------
// Matrix sums
// ---------------------------------------------------------------------------

struct GSum {
    Int direct = 0;      // entry sum of the assembled block-diagonal matrix
    Int closed = 0;      // sum of the per-block closed forms
    Int calibrated = 0;  // entry sum with off-diagonal entries lowered by one
    std::vector<TangencyBlock> blocks;
};

// Sum the tangency matrices over all extensions of one base direction.
// Blocks of zero crop mixed volume are skipped entirely.
inline GSum g_sum(const std::vector<SupportSet>& as, const Covector& delta) {
    const int k = static_cast<int>(delta.coords.size());
    GSum g;
    for (const Covector& gamma : direction_extensions(as, delta)) {
        if (crop_mixed_volume(as, gamma) == 0) continue;
        TangencyBlock b = nested_boxes_matrix(as, gamma, k);
        g.direct += b.entry_sum();
        g.closed += b.closed_form();
        g.calibrated += b.calibrated_sum();
        g.blocks.push_back(std::move(b));
    }
    return g;
}

// Euler-characteristic combination: half of (normalization Euler number +
// Newton-polygon lattice area - matrix-sum total).
inline Int labstr_delta_sum(const Int& euler_normalization, const Int& newton_area,
                            const Int& g_total) {
    Int total = euler_normalization + newton_area - g_total;
    if (total % 2 != 0)
        throw ParityViolation("delta sum combination " + total.str() + " is odd");
    return total / 2;
}

// ---------------------------------------------------------------------------
// Total delta of the projection (n=1, k=2)
// ---------------------------------------------------------------------------

// The two direct-summand embeddings of Z^3 into the rank-4 quotient of
// Z^3 + Z^3 by the antidiagonal copy of Z^2 in the last two coordinates.
inline VecI embed_first(const VecI& a) { return VecI{a[0], Int(0), a[1], a[2]}; }
inline VecI embed_second(const VecI& a) { return VecI{Int(0), a[0], a[1], a[2]}; }

struct ThsumReport {
    AssumptionReport assumptions;
    Int mv4 = 0;          // 4D mixed volume of the embedded quadruple
    Int term_pairing = 0; // equal to mv4; kept under its own name for reporting
    Int term_triple = 0;  // 3D mixed volume MV(A1, A2, A1+A2)
    Int term_crops = 0;   // horizontal crop mixed volumes
    Int g_direct = 0;
    Int g_closed = 0;
    Int g_calibrated = 0;
    std::string g_used = "calibrated";
    std::vector<TangencyBlock> blocks;
    Int total = 0;
};

inline ThsumReport thsum_report(const SupportSet& a1, const SupportSet& a2) {
    if (a1.dim != 3 || a2.dim != 3)
        throw DimensionUnsupported("total delta requires three-dimensional supports");
    const std::vector<SupportSet> as = {a1, a2};

    ThsumReport rep;
    rep.assumptions = check_assumptions(as, 2);
    if (!rep.assumptions.pass())
        throw AssumptionViolated("structural hypotheses fail: " + rep.assumptions.detail);

    Polytope p1 = polytope_of_support(a1);
    Polytope p2 = polytope_of_support(a2);
    Polytope sum = minkowski_sum(p1, p2);
    if (!sum.full_dim())
        throw NotFullDimensional("the Minkowski sum of the supports must be "
                                 "three-dimensional");

    // (1) pairing term: 4D mixed volume of the two embeddings; this equals
    // the lattice area of the fiber polygon of the pair
    std::vector<Polytope> quad;
    for (const SupportSet* a : {&a1, &a2}) {
        std::vector<VecI> pts;
        for (const VecI& p : a->points) pts.push_back(embed_first(p));
        quad.push_back(convex_hull_int(pts, 4));
    }
    for (const SupportSet* a : {&a1, &a2}) {
        std::vector<VecI> pts;
        for (const VecI& p : a->points) pts.push_back(embed_second(p));
        quad.push_back(convex_hull_int(pts, 4));
    }
    rep.mv4 = mixed_volume(quad);
    rep.term_pairing = rep.mv4;

    // (2) triple term
    rep.term_triple = mixed_volume({p1, p2, sum});

    // (3) horizontal crop term: both horizontal primitive directions
    for (Int sgn : {Int(1), Int(-1)}) {
        Covector h(VecI{sgn, Int(0), Int(0)});
        rep.term_crops += crop_mixed_volume(as, h);
    }

    // (4) matrix-sum term over all non-horizontal facet normals of the sum
    for (const PolyFacet& f : sum.facets) {
        VecI vertical{f.normal[1], f.normal[2]};
        if (is_zero(vertical)) continue;  // horizontal: handled by term (3)
        if (content(vertical) != 1)
            throw AssumptionViolated(
                "facet normal (" + to_string(f.normal) +
                ") has an imprimitive vertical part; the branch bookkeeping "
                "does not apply");
        Covector gamma(f.normal);
        if (crop_mixed_volume(as, gamma) == 0) continue;
        TangencyBlock b = nested_boxes_matrix(as, gamma, 2);
        rep.g_direct += b.entry_sum();
        rep.g_closed += b.closed_form();
        rep.g_calibrated += b.calibrated_sum();
        rep.blocks.push_back(std::move(b));
    }

    Int doubled = rep.term_pairing - rep.term_triple + rep.term_crops - rep.g_calibrated;
    if (doubled % 2 != 0)
        throw ParityViolation("total delta combination " + doubled.str() + " is odd");
    rep.total = doubled / 2;
    internal_check(rep.total >= 0, "total delta must be nonnegative");
    return rep;
}

inline Int thsum_total(const SupportSet& a1, const SupportSet& a2) {
    return thsum_report(a1, a2).total;
}

}  // namespace tropsing
