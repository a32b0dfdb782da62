#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_N): cyclotomic polynomials
// via the division recurrence, field elements as canonical residues modulo
// Phi_N, inversion by the extended Euclidean algorithm, promotion between
// orders, and matrix rank over the resulting field.

#include <map>
#include <utility>
#include <vector>

#include "tropsing/errors.hpp"
#include "tropsing/rational.hpp"

namespace tropsing {

namespace cycdetail {

using UPQ = std::vector<Rat>;  // dense univariate over Q, coefficient i at degree i

inline void trim(UPQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline int deg(const UPQ& p) { return static_cast<int>(p.size()) - 1; }

inline UPQ mul(const UPQ& a, const UPQ& b) {
    if (a.empty() || b.empty()) return {};
    UPQ r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// division with remainder; the divisor must be nonzero
inline std::pair<UPQ, UPQ> divmod(UPQ a, const UPQ& b) {
    internal_check(!b.empty(), "cyclotomic division by zero polynomial");
    trim(a);
    UPQ q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        Rat c = a.back() / b.back();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    trim(q);
    return {std::move(q), std::move(a)};
}

}  // namespace cycdetail

// The N-th cyclotomic polynomial with integer coefficients, computed by
// dividing x^N - 1 by the product of the lower-order factors; results are
// cached per order.
inline const std::vector<Int>& cyclotomic_polynomial(long long N) {
    internal_check(N >= 1, "cyclotomic order must be positive");
    static std::map<long long, std::vector<Int>> cache;
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    // x^N - 1, to be divided by all Phi_d for proper divisors d | N; every
    // divisor is monic, so the long division stays integral throughout
    std::vector<Int> num(N + 1, Int(0));
    num[0] = -1;
    num[N] = 1;
    for (long long d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        const std::vector<Int>& phi = cyclotomic_polynomial(d);
        std::vector<Int> quot(num.size() - phi.size() + 1, Int(0));
        while (num.size() >= phi.size() && !(num.size() == 1 && num[0] == 0)) {
            size_t shift = num.size() - phi.size();
            Int c = num.back();
            quot[shift] = c;
            for (size_t i = 0; i < phi.size(); ++i) num[shift + i] -= c * phi[i];
            while (num.size() > 1 && num.back() == 0) num.pop_back();
            if (num.size() < phi.size()) break;
        }
        bool rem_zero = true;
        for (const Int& x : num)
            if (x != 0) rem_zero = false;
        internal_check(rem_zero, "cyclotomic recurrence division must be exact");
        num = std::move(quot);
    }
    while (num.size() > 1 && num.back() == 0) num.pop_back();
    return cache.emplace(N, std::move(num)).first->second;
}

inline long long euler_phi(long long N) {
    return static_cast<long long>(cyclotomic_polynomial(N).size()) - 1;
}

// An element of Q(zeta_N), stored as the canonical residue modulo Phi_N:
// coefficient vector of length deg Phi_N in the basis 1, zeta, zeta^2, ...
class CyclotomicElement {
public:
    CyclotomicElement() : order_(1), c_() {}
    CyclotomicElement(long long N, std::vector<Rat> coeffs) : order_(N), c_(std::move(coeffs)) {
        reduce();
    }

    static CyclotomicElement zero(long long N) { return CyclotomicElement(N, {}); }
    static CyclotomicElement one(long long N) { return CyclotomicElement(N, {Rat(1)}); }
    static CyclotomicElement rational(long long N, const Rat& r) {
        return CyclotomicElement(N, {r});
    }
    // zeta_N^e for any integer exponent e (reduced mod N)
    static CyclotomicElement zeta_power(long long N, Int e) {
        Int r = e % N;
        if (r < 0) r += N;
        std::vector<Rat> c(to_int64(r) + 1, Rat(0));
        c.back() = Rat(1);
        return CyclotomicElement(N, std::move(c));
    }

    long long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    bool operator==(const CyclotomicElement& o) const {
        if (order_ == o.order_) return c_ == o.c_;
        long long m = lcm_order(order_, o.order_);
        return promoted(m).c_ == o.promoted(m).c_;
    }

    CyclotomicElement operator+(const CyclotomicElement& o) const {
        auto [a, b] = aligned(*this, o);
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return CyclotomicElement(a.order_, std::move(c));
    }
    CyclotomicElement operator-() const {
        std::vector<Rat> c = c_;
        for (Rat& x : c) x = -x;
        return CyclotomicElement(order_, std::move(c));
    }
    CyclotomicElement operator-(const CyclotomicElement& o) const { return *this + (-o); }
    CyclotomicElement operator*(const CyclotomicElement& o) const {
        auto [a, b] = aligned(*this, o);
        return CyclotomicElement(a.order_, cycdetail::mul(a.c_, b.c_));
    }

    // multiplicative inverse via the extended Euclidean algorithm against
    // Phi_N (irreducible over Q, so any nonzero residue is invertible)
    CyclotomicElement inverse() const {
        if (is_zero()) throw DivisionFailure("inverse of zero cyclotomic element");
        cycdetail::UPQ r0 = phi_q();
        cycdetail::UPQ r1 = c_;
        cycdetail::UPQ s0 = {};        // coefficient of the element in r0 = Phi
        cycdetail::UPQ s1 = {Rat(1)};  // coefficient of the element in r1 = a
        while (cycdetail::deg(r1) > 0) {
            auto [q, r2] = cycdetail::divmod(r0, r1);
            cycdetail::UPQ s2 = s0;
            cycdetail::UPQ qs = cycdetail::mul(q, s1);
            if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
            for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            cycdetail::trim(s2);
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        internal_check(!r1.empty(), "cyclotomic polynomial must be coprime to a nonzero residue");
        Rat scale = Rat(1) / r1[0];
        for (Rat& x : s1) x *= scale;
        return CyclotomicElement(order_, std::move(s1));
    }

    // reinterpret in Q(zeta_M) for N | M via zeta_N = zeta_M^(M/N)
    CyclotomicElement promoted(long long M) const {
        internal_check(M % order_ == 0, "promotion target must be a multiple of the order");
        if (M == order_) return *this;
        long long step = M / order_;
        std::vector<Rat> c;
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            size_t e = j * static_cast<size_t>(step);
            if (c.size() <= e) c.resize(e + 1, Rat(0));
            c[e] += c_[j];
        }
        return CyclotomicElement(M, std::move(c));
    }

private:
    long long order_;
    std::vector<Rat> c_;

    static long long lcm_order(long long a, long long b) {
        return to_int64(lcm(Int(a), Int(b)));
    }
    static std::pair<CyclotomicElement, CyclotomicElement> aligned(const CyclotomicElement& a,
                                                                   const CyclotomicElement& b) {
        if (a.order_ == b.order_) return {a, b};
        long long m = lcm_order(a.order_, b.order_);
        return {a.promoted(m), b.promoted(m)};
    }

    cycdetail::UPQ phi_q() const {
        const std::vector<Int>& phi = cyclotomic_polynomial(order_);
        cycdetail::UPQ out(phi.size());
        for (size_t i = 0; i < phi.size(); ++i) out[i] = Rat(phi[i]);
        return out;
    }

    void reduce() {
        const std::vector<Int>& phi = cyclotomic_polynomial(order_);
        if (c_.size() >= phi.size()) {
            // long division by the monic Phi_N; keep only the remainder
            for (size_t top = c_.size(); top-- >= phi.size();) {
                Rat c = c_[top];
                if (c == 0) continue;
                size_t shift = top + 1 - phi.size();
                for (size_t i = 0; i < phi.size(); ++i) c_[shift + i] -= c * Rat(phi[i]);
            }
            c_.resize(phi.size() - 1);
        }
        cycdetail::trim(c_);
    }
};

// Rank of a matrix over the cyclotomic field by Gaussian elimination; entries
// may carry different orders (they are promoted on the fly).
inline int cyclotomic_rank(std::vector<std::vector<CyclotomicElement>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    for (const auto& row : m) internal_check(row.size() == cols, "ragged matrix");
    int rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        CyclotomicElement inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            CyclotomicElement f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace tropsing
