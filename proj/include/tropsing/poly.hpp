#pragma once

// Sparse multivariate polynomials over Q with exact arithmetic: ring
// operations, exact division, bivariate gcd, local intersection numbers of
// plane curve germs at the origin, and Sylvester resultants with polynomial
// entries (fraction-free elimination).

#include <algorithm>
#include <map>
#include <vector>

#include "tropsing/errors.hpp"
#include "tropsing/rational.hpp"

namespace tropsing {

class MPoly {
public:
    int nvars = 0;
    std::map<std::vector<int>, Rat> terms;  // exponent vector -> nonzero coefficient

    MPoly() = default;
    explicit MPoly(int n) : nvars(n) {}

    static MPoly constant(int n, const Rat& c) {
        MPoly p(n);
        p.add_term(std::vector<int>(n, 0), c);
        return p;
    }
    static MPoly monomial(int n, std::vector<int> e, const Rat& c) {
        MPoly p(n);
        p.add_term(std::move(e), c);
        return p;
    }
    static MPoly variable(int n, int i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        return monomial(n, std::move(e), Rat(1));
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(std::vector<int> e, const Rat& c) {
        if (c == 0) return;
        internal_check(static_cast<int>(e.size()) == nvars, "term arity mismatch");
        for (int x : e) internal_check(x >= 0, "negative exponent");
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    MPoly operator+(const MPoly& o) const {
        internal_check(nvars == o.nvars, "arity mismatch");
        MPoly r = *this;
        for (const auto& [e, c] : o.terms) r.add_term(e, c);
        return r;
    }
    MPoly operator-() const {
        MPoly r(nvars);
        for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
        return r;
    }
    MPoly operator-(const MPoly& o) const { return *this + (-o); }
    MPoly operator*(const MPoly& o) const {
        internal_check(nvars == o.nvars, "arity mismatch");
        MPoly r(nvars);
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : o.terms) {
                std::vector<int> e(nvars);
                for (int i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
                r.add_term(std::move(e), c1 * c2);
            }
        return r;
    }
    MPoly scaled(const Rat& c) const {
        MPoly r(nvars);
        if (c == 0) return r;
        for (const auto& [e, cc] : terms) r.terms.emplace(e, cc * c);
        return r;
    }
    bool operator==(const MPoly& o) const { return nvars == o.nvars && terms == o.terms; }

    int degree(int var) const {
        int d = -1;
        for (const auto& [e, c] : terms) d = std::max(d, e[var]);
        return d;
    }
    int ord(int var) const {
        internal_check(!is_zero(), "order of the zero polynomial");
        int d = terms.begin()->first[var];
        for (const auto& [e, c] : terms) d = std::min(d, e[var]);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms) {
            int t = 0;
            for (int x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    // coefficient of var^k, as a polynomial with the same arity (var-exponent zeroed)
    MPoly coeff_of(int var, int k) const {
        MPoly r(nvars);
        for (const auto& [e, c] : terms)
            if (e[var] == k) {
                std::vector<int> e2 = e;
                e2[var] = 0;
                r.add_term(std::move(e2), c);
            }
        return r;
    }

    MPoly subst_zero(int var) const { return coeff_of(var, 0); }

    Rat at_origin() const {
        auto it = terms.find(std::vector<int>(nvars, 0));
        return it == terms.end() ? Rat(0) : it->second;
    }

    // divide by var (every term must have positive var-exponent)
    MPoly shift_down(int var) const {
        MPoly r(nvars);
        for (const auto& [e, c] : terms) {
            internal_check(e[var] >= 1, "shift below zero exponent");
            std::vector<int> e2 = e;
            e2[var] -= 1;
            r.terms.emplace(std::move(e2), c);
        }
        return r;
    }

    // evaluate at a rational point
    Rat eval(const VecQ& x) const {
        internal_check(static_cast<int>(x.size()) == nvars, "evaluation arity");
        Rat acc(0);
        for (const auto& [e, c] : terms) {
            Rat t = c;
            for (int i = 0; i < nvars; ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (is_zero()) return "0";
        std::string out;
        for (const auto& [e, c] : terms) {
            if (!out.empty()) out += " + ";
            out += to_string(c);
            for (int i = 0; i < nvars; ++i)
                if (e[i] > 0) out += "*" + names[i] + "^" + std::to_string(e[i]);
        }
        return out;
    }
};

// Exact division: returns q with a == q * b; DivisionFailure when b does not
// divide a. Long division by the lexicographically leading term.
inline MPoly mpoly_divide_exact(const MPoly& a, const MPoly& b) {
    internal_check(a.nvars == b.nvars, "arity mismatch");
    if (b.is_zero()) throw DivisionFailure("division by the zero polynomial");
    MPoly rem = a;
    MPoly quot(a.nvars);
    const auto& blead = *b.terms.rbegin();  // lexicographic leading term
    int guard = 0;
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms.rbegin();
        std::vector<int> e(a.nvars);
        for (int i = 0; i < a.nvars; ++i) {
            e[i] = rlead.first[i] - blead.first[i];
            if (e[i] < 0) throw DivisionFailure("inexact polynomial division");
        }
        MPoly t = MPoly::monomial(a.nvars, std::move(e), rlead.second / blead.second);
        quot = quot + t;
        rem = rem - t * b;
        internal_check(++guard < 1000000, "division loop guard");
    }
    return quot;
}

// ---------------------------------------------------------------------------
// Univariate and bivariate gcd machinery over Z (primitive pseudo-remainder
// sequences; contents are stripped at every step to keep coefficients small).

namespace polyns {

using UPZ = std::vector<Int>;  // integer univariate, coefficient i at degree i

inline void upz_trim(UPZ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline bool upz_is_zero(const UPZ& p) { return p.empty(); }
inline int upz_deg(const UPZ& p) { return static_cast<int>(p.size()) - 1; }

inline Int upz_content(const UPZ& p) {
    Int g = 0;
    for (const Int& c : p) g = gcd(g, c);
    return g;
}

inline UPZ upz_primitive(UPZ p) {
    upz_trim(p);
    Int g = upz_content(p);
    if (g > 1)
        for (Int& c : p) c /= g;
    if (!p.empty() && p.back() < 0)
        for (Int& c : p) c = -c;
    return p;
}

inline UPZ upz_mul(const UPZ& a, const UPZ& b) {
    if (upz_is_zero(a) || upz_is_zero(b)) return {};
    UPZ r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    upz_trim(r);
    return r;
}

// pseudo-remainder with numeric content stripping after each reduction step
inline UPZ upz_prem(UPZ a, const UPZ& b) {
    upz_trim(a);
    internal_check(!upz_is_zero(b), "pseudo-division by zero");
    while (!upz_is_zero(a) && a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        Int alc = a.back();
        Int blc = b.back();
        for (Int& c : a) c *= blc;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= alc * b[i];
        upz_trim(a);
        Int g = upz_content(a);
        if (g > 1)
            for (Int& c : a) c /= g;
    }
    return a;
}

// gcd in Z[x]: numeric content gcd times the primitive-part gcd
inline UPZ upz_gcd(UPZ a, UPZ b) {
    upz_trim(a);
    upz_trim(b);
    if (upz_is_zero(a)) return upz_primitive(std::move(b));
    if (upz_is_zero(b)) return upz_primitive(std::move(a));
    Int cont = gcd(upz_content(a), upz_content(b));
    a = upz_primitive(std::move(a));
    b = upz_primitive(std::move(b));
    while (!upz_is_zero(b)) {
        UPZ r = upz_primitive(upz_prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (cont > 1)
        for (Int& c : a) c *= cont;
    return a;
}

inline Rat upz_eval(const UPZ& p, const Rat& x) {
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

// Bivariate polynomials as layered integer univariate ones:
// F = sum layer[k](t1) * t2^k.
using BPZ = std::vector<UPZ>;

inline void bpz_trim(BPZ& f) {
    while (!f.empty() && upz_is_zero(f.back())) f.pop_back();
}
inline bool bpz_is_zero(const BPZ& f) { return f.empty(); }

// clear denominators; scaling by a positive constant is harmless everywhere
// this representation is used
inline BPZ bpz_of(const MPoly& f) {
    internal_check(f.nvars == 2, "bivariate conversion needs two variables");
    Int denom = 1;
    for (const auto& [e, c] : f.terms) denom = lcm(denom, den(c));
    BPZ out;
    for (const auto& [e, c] : f.terms) {
        if (static_cast<int>(out.size()) <= e[1]) out.resize(e[1] + 1);
        UPZ& layer = out[e[1]];
        if (static_cast<int>(layer.size()) <= e[0]) layer.resize(e[0] + 1, Int(0));
        layer[e[0]] = num(c) * (denom / den(c));
    }
    for (UPZ& layer : out) upz_trim(layer);
    bpz_trim(out);
    return out;
}

inline UPZ bpz_content(const BPZ& f) {
    UPZ g;
    for (const UPZ& layer : f)
        if (!upz_is_zero(layer)) g = upz_gcd(g, layer);
    return g;
}

// exact division of every layer by a common divisor polynomial
inline BPZ bpz_divide_content(const BPZ& f, const UPZ& c) {
    internal_check(!upz_is_zero(c), "content division by zero");
    BPZ out;
    for (const UPZ& layer : f) {
        if (upz_is_zero(layer)) {
            out.push_back({});
            continue;
        }
        // rational long division; exactness is checked
        std::vector<Rat> rem(layer.size());
        for (size_t i = 0; i < layer.size(); ++i) rem[i] = Rat(layer[i]);
        std::vector<Rat> quot(layer.size(), Rat(0));
        int rd = static_cast<int>(rem.size()) - 1;
        while (rd >= 0 && rem[rd] == 0) --rd;
        const int cd = upz_deg(c);
        while (rd >= cd) {
            Rat q = rem[rd] / Rat(c.back());
            quot[rd - cd] = q;
            for (int i = 0; i <= cd; ++i) rem[rd - cd + i] -= q * Rat(c[i]);
            while (rd >= 0 && rem[rd] == 0) --rd;
        }
        internal_check(rd < 0, "content division must be exact");
        UPZ qz;
        for (const Rat& q : quot) {
            internal_check(is_integral(q), "content quotient must be integral");
            qz.push_back(to_integer(q));
        }
        upz_trim(qz);
        out.push_back(std::move(qz));
    }
    bpz_trim(out);
    return out;
}

// pseudo-remainder of a by b in (Z[t1])[t2]; the result is only ever used in
// gcd chains, so contents are stripped freely: numeric content after every
// reduction step, and the full polynomial content whenever the layer degrees
// grow past a threshold (this blocks the multiplicative degree cascade from
// repeated leading-coefficient multiplications)
inline BPZ bpz_prem(BPZ a, const BPZ& b) {
    bpz_trim(a);
    internal_check(!bpz_is_zero(b), "pseudo-division by zero");
    const UPZ& blc = b.back();
    auto max_layer_deg = [](const BPZ& f) {
        int d = -1;
        for (const UPZ& layer : f) d = std::max(d, upz_deg(layer));
        return d;
    };
    const int limit = 2 * std::max(max_layer_deg(a), max_layer_deg(b)) + 32;
    int guard = 0;
    while (!bpz_is_zero(a) && a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        UPZ alc = a.back();
        BPZ next(a.size());
        for (size_t k = 0; k < a.size(); ++k) next[k] = upz_mul(blc, a[k]);
        for (size_t k = 0; k < b.size(); ++k) {
            UPZ t = upz_mul(alc, b[k]);
            UPZ& dst = next[k + shift];
            if (dst.size() < t.size()) dst.resize(t.size(), Int(0));
            for (size_t i = 0; i < t.size(); ++i) dst[i] -= t[i];
            upz_trim(dst);
        }
        internal_check(upz_is_zero(next.back()), "top layer must cancel");
        next.pop_back();
        bpz_trim(next);
        // strip the numeric content across all layers
        Int g = 0;
        for (const UPZ& layer : next) g = gcd(g, upz_content(layer));
        if (g > 1)
            for (UPZ& layer : next)
                for (Int& cc : layer) cc /= g;
        if (!bpz_is_zero(next) && max_layer_deg(next) > limit) {
            UPZ cont = bpz_content(next);
            if (upz_deg(cont) > 0) next = bpz_divide_content(next, cont);
        }
        a = std::move(next);
        internal_check(++guard < 10000, "pseudo-division loop guard");
    }
    return a;
}

inline MPoly bpz_to_mpoly(const BPZ& f) {
    MPoly out(2);
    for (size_t k = 0; k < f.size(); ++k)
        for (size_t i = 0; i < f[k].size(); ++i)
            if (f[k][i] != 0)
                out.add_term({static_cast<int>(i), static_cast<int>(k)}, Rat(f[k][i]));
    return out;
}

inline MPoly upz_to_mpoly(const UPZ& f) {
    MPoly out(2);
    for (size_t i = 0; i < f.size(); ++i)
        if (f[i] != 0) out.add_term({static_cast<int>(i), 0}, Rat(f[i]));
    return out;
}

// gcd over Q[t2] of two integer univariate polynomials given as coefficient
// vectors; used by the fast certificate below (small degrees only)
inline std::vector<Rat> upq_gcd_small(std::vector<Rat> a, std::vector<Rat> b) {
    auto trim = [](std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // remainder of a by b
        while (!a.empty() && a.size() >= b.size()) {
            size_t shift = a.size() - b.size();
            Rat q = a.back() / b.back();
            for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
            trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

} // namespace polyns

// Greatest common divisor in Q[t1, t2] by a primitive pseudo-remainder
// sequence over (Z[t1])[t2]; the result has integer coefficients and is
// determined up to a nonzero constant.
inline MPoly bivariate_gcd(const MPoly& f, const MPoly& g) {
    internal_check(f.nvars == 2 && g.nvars == 2, "bivariate gcd arity");
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    polyns::BPZ a = polyns::bpz_of(f);
    polyns::BPZ b = polyns::bpz_of(g);
    if (a.size() == 1 || b.size() == 1) {
        // one operand lies in Q[t1]: reduce to a univariate gcd with the content
        polyns::UPZ ua = (a.size() == 1) ? a[0] : polyns::bpz_content(a);
        polyns::UPZ ub = (b.size() == 1) ? b[0] : polyns::bpz_content(b);
        return polyns::upz_to_mpoly(polyns::upz_gcd(ua, ub));
    }
    polyns::UPZ cont = polyns::upz_gcd(polyns::bpz_content(a), polyns::bpz_content(b));
    a = polyns::bpz_divide_content(a, polyns::bpz_content(a));
    b = polyns::bpz_divide_content(b, polyns::bpz_content(b));
    if (a.size() < b.size()) std::swap(a, b);
    int guard = 0;
    while (!polyns::bpz_is_zero(b)) {
        polyns::BPZ r = polyns::bpz_prem(a, b);
        if (!polyns::bpz_is_zero(r)) r = polyns::bpz_divide_content(r, polyns::bpz_content(r));
        a = std::move(b);
        b = std::move(r);
        internal_check(++guard < 10000, "gcd loop guard");
    }
    // multiply the primitive gcd back by the content gcd
    polyns::BPZ out;
    for (const polyns::UPZ& layer : a) out.push_back(polyns::upz_mul(layer, cont));
    polyns::bpz_trim(out);
    return polyns::bpz_to_mpoly(out);
}

namespace polyns {

// Does some common factor of F and G vanish at the origin? Decomposed into
// the part living in Q[t1] (content gcd, exact and cheap) and the part with
// positive t2-degree. For the latter, a single evaluation t1 = a with
// non-dropping t2-degree whose univariate gcd is constant proves there is
// none; otherwise fall back to the exact bivariate gcd.
inline bool common_factor_through_origin(const MPoly& F, const MPoly& G) {
    BPZ a = bpz_of(F);
    BPZ b = bpz_of(G);
    UPZ conta = bpz_content(a);
    UPZ contb = bpz_content(b);
    UPZ c = upz_gcd(conta, contb);
    if (!upz_is_zero(c) && c.front() == 0) return true;  // divisible by t1
    if (a.size() == 1 || b.size() == 1) return false;    // no t2-positive part possible
    BPZ pa = bpz_divide_content(a, conta);
    BPZ pb = bpz_divide_content(b, contb);
    for (Int aa = 1; aa <= 6; ++aa) {
        if (upz_eval(pa.back(), Rat(aa)) == 0) continue;  // t2-degree drops here
        std::vector<Rat> ea, eb;
        for (const UPZ& layer : pa) ea.push_back(upz_eval(layer, Rat(aa)));
        for (const UPZ& layer : pb) eb.push_back(upz_eval(layer, Rat(aa)));
        std::vector<Rat> gg = upq_gcd_small(std::move(ea), std::move(eb));
        if (gg.size() == 1) return false;  // constant gcd: certificate holds
        // a nonconstant gcd here may be a coincidence of the sample point, so
        // keep trying further points before paying for the exact computation
    }
    // exact fallback: primitive-part gcd and its value at the origin
    if (pa.size() < pb.size()) std::swap(pa, pb);
    int guard = 0;
    while (!bpz_is_zero(pb)) {
        BPZ r = bpz_prem(pa, pb);
        if (!bpz_is_zero(r)) r = bpz_divide_content(r, bpz_content(r));
        pa = std::move(pb);
        pb = std::move(r);
        internal_check(++guard < 10000, "gcd loop guard");
    }
    if (pa.size() <= 1) return false;  // gcd has t2-degree zero: primitive, no factor
    Rat at_origin = pa[0].empty() ? Rat(0) : Rat(pa[0][0]);
    return at_origin == 0;
}

} // namespace polyns

// ---------------------------------------------------------------------------
// Intersection multiplicity of plane curve germs at the origin.

struct CurveMultiplicity {
    bool infinite = false;
    Int value = 0;
    bool operator==(const CurveMultiplicity& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};

inline CurveMultiplicity mult_infinite() { return CurveMultiplicity{true, 0}; }
inline CurveMultiplicity mult_of(Int v) { return CurveMultiplicity{false, std::move(v)}; }

// scale a polynomial by a positive rational so its coefficients become
// integers with trivial common divisor
inline void mpoly_make_primitive(MPoly& p) {
    if (p.is_zero()) return;
    Int denom = 1;
    for (const auto& [e, c] : p.terms) denom = lcm(denom, den(c));
    Int g = 0;
    for (const auto& [e, c] : p.terms) g = gcd(g, num(c) * (denom / den(c)));
    for (auto& [e, c] : p.terms) c = Rat(num(c) * (denom / den(c)) / g);
}

// Intersection multiplicity of two plane curves at the origin, by Euclidean
// reduction on the restrictions to the first axis. Infinite exactly when the
// curves share a component through the origin. Both operands are kept as
// integer polynomials with trivial content throughout; each elimination step
// replaces G by lc(f)*G - lc(g)*t1^(s-r)*F, which scales the pair by nonzero
// constants only and therefore leaves the multiplicity unchanged.
inline CurveMultiplicity fulton_intersection_number(MPoly F, MPoly G) {
    internal_check(F.nvars == 2 && G.nvars == 2, "intersection numbers need two variables");
    if (F.is_zero() || G.is_zero()) {
        const MPoly& other = F.is_zero() ? G : F;
        return other.at_origin() == 0 ? mult_infinite() : mult_of(0);
    }
    if (polyns::common_factor_through_origin(F, G)) return mult_infinite();
    mpoly_make_primitive(F);
    mpoly_make_primitive(G);
    Int acc = 0;
    int guard = 0;
    while (true) {
        internal_check(++guard < 200000, "intersection-number loop guard");
        if (F.at_origin() != 0 || G.at_origin() != 0) return mult_of(acc);
        MPoly f = F.subst_zero(1);
        MPoly g = G.subst_zero(1);
        const bool fz = f.is_zero(), gz = g.is_zero();
        internal_check(!(fz && gz), "both restrictions vanish despite the factor screen");
        if (fz || gz) {
            // one operand is divisible by t2; split off that factor, whose
            // multiplicity against the other is the axis vanishing order
            acc += Int((fz ? g : f).ord(0));
            MPoly& divisible = fz ? F : G;
            divisible = divisible.shift_down(1);
            continue;
        }
        int r = f.degree(0);
        int s = g.degree(0);
        if (r > s) {
            std::swap(F, G);
            std::swap(f, g);
            std::swap(r, s);
        }
        const Rat fr = f.coeff_of(0, r).at_origin();
        const Rat gs = g.coeff_of(0, s).at_origin();
        G = G.scaled(fr) - MPoly::monomial(2, {s - r, 0}, gs) * F;
        mpoly_make_primitive(G);
    }
}

// ---------------------------------------------------------------------------
// Sylvester resultant eliminating one variable; entries may involve the other
// variables. Fraction-free (Bareiss) elimination with exact polynomial
// division keeps every intermediate a polynomial.

inline MPoly mpoly_pow(const MPoly& p, int k) {
    MPoly r = MPoly::constant(p.nvars, Rat(1));
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

inline MPoly sylvester_resultant(const MPoly& f, const MPoly& g, int var) {
    internal_check(f.nvars == g.nvars, "resultant arity mismatch");
    if (f.is_zero() || g.is_zero()) throw SchemaError("resultant of the zero polynomial");
    const int m = f.degree(var);
    const int n = g.degree(var);
    if (m == 0) return mpoly_pow(f, n);
    if (n == 0) return mpoly_pow(g, m);
    const int N = m + n;
    std::vector<std::vector<MPoly>> M(N, std::vector<MPoly>(N, MPoly(f.nvars)));
    for (int i = 0; i < n; ++i)  // rows of f-coefficients first
        for (int k = 0; k <= m; ++k) M[i][i + k] = f.coeff_of(var, m - k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) M[n + i][i + k] = g.coeff_of(var, n - k);

    int sign = 1;
    MPoly prev = MPoly::constant(f.nvars, Rat(1));
    for (int k = 0; k + 1 < N; ++k) {
        int pr = -1;
        for (int i = k; i < N; ++i)
            if (!M[i][k].is_zero()) { pr = i; break; }
        if (pr < 0) return MPoly(f.nvars);  // singular: resultant vanishes
        if (pr != k) {
            std::swap(M[pr], M[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j)
                M[i][j] = mpoly_divide_exact(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
            M[i][k] = MPoly(f.nvars);
        }
        prev = M[k][k];
    }
    MPoly det = M[N - 1][N - 1];
    return sign == 1 ? det : -det;
}

// ---------------------------------------------------------------------------
// Divided difference of a one-variable Laurent-free polynomial given by a
// support together with coefficients: for f(t) = sum c_b t^b this is
// (f(t1) - f(t2)) / (t1 - t2).

inline MPoly divided_difference(const std::map<Int, Rat>& coeffs) {
    MPoly out(2);
    for (const auto& [b, c] : coeffs) {
        if (c == 0) continue;
        if (b < 0) throw SchemaError("negative exponent in divided difference");
        long long bb = to_int64(b);
        for (long long p = 0; p + 1 <= bb; ++p)
            out.add_term({static_cast<int>(p), static_cast<int>(bb - 1 - p)}, c);
    }
    return out;
}

} // namespace tropsing
