#pragma once
// Stratification of the singular locus of a two-support sparse eliminant.
//
// Eliminating the variable from a pair of univariate sparse polynomials with
// exponent sets B1, B2 yields one polynomial in the coefficients.  Its zero
// set is singular along finitely many irreducible strata, each carrying a
// transversal singularity type and a degree.  This header enumerates those
// strata: the split-exponent strata (one set decomposes into two residue
// classes), the low- and high-order strata, the folding strata of two-element
// sets, the twin stratum of equal three-element sets, and the residual
// one-node family.  Degrees are cross-checkable against the singularity
// census of a spatial model curve, which counts each stratum's points on a
// concrete shadow.

#include <string>
#include <utility>
#include <vector>

#include "tropsing/census.hpp"
#include "tropsing/decomp.hpp"
#include "tropsing/delta.hpp"
#include "tropsing/errors.hpp"
#include "tropsing/lattice.hpp"

namespace tropsing {

// One stratum of the singular locus.
struct StratumEntry {
    std::string name;           // S_0, S_inf, S_<m>, T_0, T_1, T_2, S1, S, S_<i>^<j>
    std::string condition;      // why the stratum is present
    bool has_degree = true;     // individual family members carry no degree
    Int degree = 0;
    std::string degree_source;  // "table", "closed_form", or "census"
    SingularityKind type;       // transversal singularity type along the stratum
    Int components = 1;

    bool operator==(const StratumEntry&) const = default;
};

struct StrataReport {
    NormalizedSupports supports;  // normalized exponent sets plus the substitution record
    std::vector<StratumEntry> entries;
};

// Product of a univariate exponent set with the unit triangle: the spatial
// model whose shadow realizes every stratum as a visible singular point.
inline SupportSet triangle_prism_support(const BSet& b) {
    std::vector<VecI> pts;
    for (const Int& x : b) {
        pts.push_back(VecI{x, Int(0), Int(0)});
        pts.push_back(VecI{x, Int(1), Int(0)});
        pts.push_back(VecI{x, Int(0), Int(1)});
    }
    return SupportSet(3, std::move(pts));
}

// Census of the triangle-prism model of the normalized pair; stratum degrees
// equal the matching singularity counts of this shadow curve.
inline SingularityCensus strata_cross_check(const BSet& b1_in, const BSet& b2_in) {
    NormalizedSupports norm = normalize_supports(b1_in, b2_in);
    return census(triangle_prism_support(norm.b1), triangle_prism_support(norm.b2));
}

// Enumerates the strata of the singular locus for the given exponent sets.
// Inputs are normalized first (minima to zero, common span factor divided
// out); the report records the normalization.
inline StrataReport strata_report(const BSet& b1_in, const BSet& b2_in) {
    StrataReport out;
    out.supports = normalize_supports(b1_in, b2_in);
    const BSet& b1 = out.supports.b1;
    const BSet& b2 = out.supports.b2;
    require_not_exceptional(b1, b2);

    const Int len1 = b1.back() - b1.front();
    const Int len2 = b2.back() - b2.front();
    const BSet r1 = censusdetail::reflected_to_zero(b1);
    const BSet r2 = censusdetail::reflected_to_zero(b2);

    // Split strata: one exponent set decomposes into two residue classes
    // modulo m, so m sheets of the eliminated variable merge at a time.
    std::vector<MDecomposition> decs = find_m_decompositions(b1, b2);
    std::vector<Int> split_degrees;
    for (const MDecomposition& dec : decs) {
        const BSet& other = dec.which == 1 ? b2 : b1;
        Int raw = (dec.part1.back() - dec.part1.front()) +
                  (dec.part2.back() - dec.part2.front()) + (other.back() - other.front());
        internal_check(raw % dec.m == 0,
                       "split-stratum span total must be divisible by the modulus");
        StratumEntry e;
        e.name = "S_" + dec.m.str();
        e.condition = "exponent set " + std::to_string(dec.which) +
                      " splits into two residue classes modulo " + dec.m.str();
        e.degree = raw / dec.m;
        e.degree_source = "table";
        e.type = ordinary_kind(dec.m);
        split_degrees.push_back(e.degree);
        out.entries.push_back(std::move(e));
    }

    // Low-order stratum: killing both lowest coefficients creates a unibranch
    // point; absent exactly when some set contains its minimum plus one (the
    // germ is then smooth and the locus is not singular there).
    const Int delta_low = delta_sparse(b1, b2).delta;
    const Int delta_high = delta_sparse(r1, r2).delta;
    if (!censusdetail::low_end_smooth(b1, b2)) {
        StratumEntry e;
        e.name = "S_0";
        e.condition = "neither exponent set contains its minimum plus one";
        e.degree = 1;
        e.degree_source = "table";
        e.type = sparse_kind(b1, b2);
        internal_check(e.type.delta == delta_low, "low-order delta must match its stratum type");
        out.entries.push_back(std::move(e));
    }

    // High-order stratum: the same with exponents reflected.
    if (!censusdetail::low_end_smooth(r1, r2)) {
        StratumEntry e;
        e.name = "S_inf";
        e.condition = "neither exponent set contains its maximum minus one";
        e.degree = 1;
        e.degree_source = "table";
        e.type = sparse_kind(r1, r2);
        internal_check(e.type.delta == delta_high, "high-order delta must match its stratum type");
        out.entries.push_back(std::move(e));
    }

    // Folding strata: a two-element exponent set merges its two sheets while
    // the other polynomial brings all of its roots together.
    for (int i = 1; i <= 2; ++i) {
        const BSet& self = i == 1 ? b1 : b2;
        const Int& other_len = i == 1 ? len2 : len1;
        if (self.size() != 2 || other_len <= 1) continue;
        StratumEntry e;
        e.name = "T_" + std::to_string(i);
        e.condition = "exponent set " + std::to_string(i) +
                      " has two elements and the other set has span > 1";
        e.degree = 1;
        e.degree_source = "table";
        e.type = ordinary_kind(other_len);
        out.entries.push_back(std::move(e));
    }

    // Twin stratum: equal three-element sets (up to shift) give a rank-one
    // locus of coefficient matrices; it absorbs the whole residual family.
    bool twin = b1 == b2 && b1.size() == 3;
    if (twin) {
        StratumEntry e;
        e.name = "T_0";
        e.condition = "the exponent sets coincide and have three elements";
        e.degree = 3;
        e.degree_source = "table";
        e.type = ordinary_kind(len1);
        out.entries.push_back(std::move(e));
    }

    // Residual one-node family: strata along which two roots of the
    // eliminated variable collide at a unit of some finite order, plus the
    // free-collision stratum S.  Suppressed entirely by the twin stratum.
    if (!twin) {
        std::vector<std::string> members;
        for (int i = 1; i <= 2; ++i) {
            const BSet& self = i == 1 ? b1 : b2;
            const BSet& other = i == 1 ? b2 : b1;
            if (other.size() <= 2) continue;
            Int k = span_gcd(self);
            for (Int j = 1; 2 * j <= k; ++j) {
                bool excluded = false;
                for (const MDecomposition& dec : decs) {
                    if (k % dec.m != 0) continue;
                    Int step = k / dec.m;
                    if (j % step == 0) {
                        excluded = true;
                        break;
                    }
                }
                if (!excluded)
                    members.push_back("S_" + std::to_string(i) + "^" + j.str());
            }
        }
        bool generic = b1.size() > 2 && b2.size() > 2;
        if (generic) members.push_back("S");

        if (!members.empty()) {
            StratumEntry fam;
            fam.name = "S1";
            fam.condition = "root-collision family with " + std::to_string(members.size()) +
                            " component(s)";
            fam.type = ordinary_kind(Int(2));
            fam.components = Int(members.size());
            if (generic) {
                // Node count of the model shadow, written in closed form: the
                // total delta budget of the triangle-prism model minus the
                // contributions of every other stratum.
                Int l = len1 + len2;
                Int deg = (l - 1) * (l - 2) / 2 - delta_low - delta_high;
                for (size_t s = 0; s < decs.size(); ++s)
                    deg -= split_degrees[s] * ordinary_kind(decs[s].m).delta;
                fam.degree = deg;
                fam.degree_source = "closed_form";
            } else {
                fam.degree = strata_cross_check(b1, b2).nodes;
                fam.degree_source = "census";
            }
            internal_check(fam.degree >= 0, "family degree must be nonnegative");
            out.entries.push_back(std::move(fam));
            for (const std::string& name : members) {
                StratumEntry e;
                e.name = name;
                e.condition = "member of the root-collision family";
                e.has_degree = false;
                e.degree = 0;
                e.degree_source = "";
                e.type = ordinary_kind(Int(2));
                out.entries.push_back(std::move(e));
            }
        }
    }

    return out;
}

} // namespace tropsing
