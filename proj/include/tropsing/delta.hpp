#pragma once

// Delta invariants of parametrized plane curve germs (t^B1, t^B2):
// the closed formula from the exponent supports, the genericity test on
// coefficients that the formula requires, and an independent exact value
// computed from divided differences and local intersection numbers.

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "tropsing/errors.hpp"
#include "tropsing/lattice.hpp"
#include "tropsing/poly.hpp"
#include "tropsing/rational.hpp"

namespace tropsing {

struct DeltaResult {
    Int delta;
    Int milnor;               // 2 * delta
    std::vector<Int> j_seq;   // gcd window sequence, ends at its first 1
    Int scale = 1;            // common exponent factor divided out (1 if none)
};

namespace deltadetail {

// Drop zero, validate positivity, keep sorted unique values.
inline BSet positive_part(const BSet& b) {
    BSet out;
    for (const Int& v : b) {
        if (v < 0) throw InvalidSupport("exponents must be nonnegative");
        if (v > 0) out.push_back(v);
    }
    if (out.empty()) throw InvalidSupport("support needs a positive exponent");
    return out;
}

} // namespace deltadetail

// Delta invariant of the germ parametrized by two monomial supports with
// generic coefficients. When the two supports share a common exponent factor
// the parametrization is traversed multiple times; by default the factor is
// divided out first, and with rescaling disabled this raises NotInjective.
inline DeltaResult delta_sparse(const BSet& b1_in, const BSet& b2_in,
                                bool allow_rescale = true) {
    BSet b1 = deltadetail::positive_part(b1_in);
    BSet b2 = deltadetail::positive_part(b2_in);
    Int g = 0;
    for (const Int& v : b1) g = gcd(g, v);
    for (const Int& v : b2) g = gcd(g, v);
    DeltaResult res;
    if (g > 1) {
        if (!allow_rescale)
            throw NotInjective("supports share a common exponent factor " + to_string(g));
        for (Int& v : b1) v /= g;
        for (Int& v : b2) v /= g;
        res.scale = g;
    }
    const Int d1 = b1.front();
    const Int d2 = b2.front();
    Int jsum = 0;
    for (Int r = 0;; ++r) {
        Int j = 0;
        for (const Int& v : b1)
            if (v <= d1 + r) j = gcd(j, v);
        for (const Int& v : b2)
            if (v <= d2 + r) j = gcd(j, v);
        res.j_seq.push_back(j);
        jsum += j - 1;
        if (j == 1) break;
    }
    Int num = (d1 - 1) * (d2 - 1) + jsum;
    internal_check(num % 2 == 0, "delta numerator must be even");
    res.delta = num / 2;
    res.milnor = res.delta * 2;
    return res;
}

// Coefficient data of a parametrization component: exponent -> coefficient.
using CoeffMap = std::map<Int, Rat>;

struct NondegReport {
    bool nondegenerate = true;
    Int witness = 0;  // failing common divisor when degenerate
};

// Genericity of the coefficients for the closed delta formula: for every
// common divisor k > 1 of the two minimal exponents, the first exponent step
// off the k-grid must enter the two components with different normalized
// coefficients. Coefficients absent from a component count as zero.
inline NondegReport is_zero_nondegenerate(const CoeffMap& f1_in, const CoeffMap& f2_in) {
    std::array<CoeffMap, 2> f;
    Int g = 0;
    for (int i = 0; i < 2; ++i) {
        const CoeffMap& src = (i == 0) ? f1_in : f2_in;
        for (const auto& [b, c] : src) {
            if (b < 0) throw InvalidSupport("exponents must be nonnegative");
            if (b == 0 || c == 0) continue;  // constant shift / dead term
            f[i][b] = c;
            g = gcd(g, b);
        }
        if (f[i].empty()) throw InvalidSupport("support needs a positive exponent");
    }
    if (g > 1) {
        for (int i = 0; i < 2; ++i) {
            CoeffMap scaled;
            for (const auto& [b, c] : f[i]) scaled[b / g] = c;
            f[i] = std::move(scaled);
        }
    }
    const Int d1 = f[0].begin()->first;
    const Int d2 = f[1].begin()->first;
    Int dg = gcd(d1, d2);
    for (Int k = 2; k <= dg; ++k) {
        if (dg % k != 0) continue;
        Int rk = -1;
        for (int i = 0; i < 2; ++i) {
            const Int di = (i == 0) ? d1 : d2;
            for (const auto& [b, c] : f[i]) {
                Int off = b - di;
                if (off % k == 0) continue;
                if (rk < 0 || off < rk) rk = off;
            }
        }
        internal_check(rk >= 0, "no off-grid exponent despite coprime supports");
        auto coeff_at = [&](int i, const Int& b) {
            auto it = f[i].find(b);
            return it == f[i].end() ? Rat(0) : it->second;
        };
        Rat lhs = coeff_at(0, d1 + rk) / (f[0].begin()->second * Rat(d1));
        Rat rhs = coeff_at(1, d2 + rk) / (f[1].begin()->second * Rat(d2));
        if (lhs == rhs) return NondegReport{false, k};
    }
    return NondegReport{true, 0};
}

// Independent delta value: intersection multiplicity of the two divided
// differences at the origin, counting ordered parameter pairs, halved.
inline Int delta_oracle(const CoeffMap& f1, const CoeffMap& f2) {
    MPoly F1 = divided_difference(f1);
    MPoly F2 = divided_difference(f2);
    CurveMultiplicity m = fulton_intersection_number(F1, F2);
    if (m.infinite)
        throw NotInjective("parametrization identifies infinitely many parameter pairs");
    internal_check(m.value % 2 == 0, "ordered pair count must be even");
    return m.value / 2;
}

} // namespace tropsing
