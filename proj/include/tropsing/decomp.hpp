#pragma once

// Normalization and residue-class decompositions of pairs of one-dimensional
// exponent sets: shift minima to zero, divide out the common span gcd, and
// search for the modulus-m splittings that drive the stratum enumeration and
// the projection census.

#include <string>
#include <vector>

#include "tropsing/errors.hpp"
#include "tropsing/lattice.hpp"
#include "tropsing/rational.hpp"

namespace tropsing {

// Record of the substitution applied by normalize_supports: the original sets
// are recovered as B_i = scale * B_i' + shift_i.
struct SupportNormalization {
    Int shift1 = 0;
    Int shift2 = 0;
    Int scale = 1;
    bool trivial() const { return shift1 == 0 && shift2 == 0 && scale == 1; }
};

struct NormalizedSupports {
    BSet b1;
    BSet b2;
    SupportNormalization record;
};

// Shift both minima to 0 and divide by the common gcd of all within-set
// differences (a monomial change of variable; singletons impose no
// constraint on the gcd).
inline NormalizedSupports normalize_supports(const BSet& b1, const BSet& b2) {
    if (b1.empty() || b2.empty()) throw SchemaError("exponent sets must be nonempty");
    NormalizedSupports out;
    out.record.shift1 = b1.front();
    out.record.shift2 = b2.front();
    Int g = tuple_span_gcd({b1, b2});
    out.record.scale = (g == 0) ? Int(1) : g;
    for (const Int& x : b1) out.b1.push_back((x - out.record.shift1) / out.record.scale);
    for (const Int& x : b2) out.b2.push_back((x - out.record.shift2) / out.record.scale);
    return out;
}

// One admissible splitting: set number `which` (1 or 2) decomposes into two
// nonempty residue classes mod m whose joint span gcd with the other set is
// exactly m.
struct MDecomposition {
    int which = 0;
    Int m = 0;
    BSet part1;
    BSet part2;
};

// Search all moduli m >= 2 (bounded by the total span length) for residue
// decompositions; the enumeration asserts at runtime that no modulus admits
// two distinct splittings across the two sets.
inline std::vector<MDecomposition> find_m_decompositions(const BSet& b1, const BSet& b2) {
    if (b1.empty() || b2.empty()) throw SchemaError("exponent sets must be nonempty");
    const BSet* sets[2] = {&b1, &b2};
    Int span_total = (b1.back() - b1.front()) + (b2.back() - b2.front());
    std::vector<MDecomposition> out;
    for (Int m = 2; m <= span_total; ++m) {
        std::vector<MDecomposition> hits;
        for (int i = 0; i < 2; ++i) {
            const BSet& self = *sets[i];
            const BSet& other = *sets[1 - i];
            if (self.size() <= 2) continue;
            Int other_span = span_gcd(other);
            // singleton convention: span 0 constrains nothing
            if (other_span != 0 && other_span % m != 0) continue;
            // partition by residue mod m; a hit needs exactly two classes
            BSet cls1, cls2;
            Int r1 = -1, r2 = -1;
            bool more_than_two = false;
            for (const Int& x : self) {
                Int r = x % m;
                if (r < 0) r += m;
                if (r1 == -1 || r == r1) {
                    r1 = r;
                    cls1.push_back(x);
                } else if (r2 == -1 || r == r2) {
                    r2 = r;
                    cls2.push_back(x);
                } else {
                    more_than_two = true;
                    break;
                }
            }
            if (more_than_two || cls2.empty()) continue;
            if (tuple_span_gcd({cls1, cls2, other}) != m) continue;
            MDecomposition d;
            d.which = i + 1;
            d.m = m;
            d.part1 = std::move(cls1);
            d.part2 = std::move(cls2);
            hits.push_back(std::move(d));
        }
        if (hits.size() > 1)
            throw InconsistencyDetected("modulus " + hits[0].m.str() +
                                        " admits more than one residue decomposition");
        if (!hits.empty()) out.push_back(std::move(hits[0]));
    }
    return out;
}

// Exclusions under which the stratum enumeration is undefined: a singleton
// exponent set, or two two-point sets of unit span (the linear case).
inline void require_not_exceptional(const BSet& b1, const BSet& b2) {
    if (b1.size() < 2 || b2.size() < 2)
        throw ExceptionalCase("a one-element exponent set admits no stratum enumeration");
    Int l1 = b1.back() - b1.front();
    Int l2 = b2.back() - b2.front();
    if (l1 == 1 && l2 == 1)
        throw ExceptionalCase("both spans equal 1: the eliminant is linear and smooth");
}

}  // namespace tropsing
