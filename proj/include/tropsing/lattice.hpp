#pragma once

// Exact integer-lattice linear algebra and support-set combinatorics:
// spans, crops, vertical indices, iota-sequences, Hermite-style reduction,
// integer kernels and saturated subspace bases.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tropsing/errors.hpp"
#include "tropsing/rational.hpp"

namespace tropsing {

// ---------------------------------------------------------------------------
// Basic vector helpers
// ---------------------------------------------------------------------------

inline Int dot(const VecI& a, const VecI& b) {
    internal_check(a.size() == b.size(), "dot: dimension mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline VecI sub(const VecI& a, const VecI& b) {
    internal_check(a.size() == b.size(), "sub: dimension mismatch");
    VecI r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline VecI add(const VecI& a, const VecI& b) {
    internal_check(a.size() == b.size(), "add: dimension mismatch");
    VecI r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline VecI negate(const VecI& a) {
    VecI r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Int content(const VecI& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

inline bool is_zero(const VecI& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

// Divides out the content; the zero vector is returned unchanged.
inline VecI primitive(const VecI& v) {
    Int g = content(v);
    if (g == 0 || g == 1) return v;
    VecI r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

// Finite multiplicity-free subset of Z^d.
struct SupportSet {
    int dim = 0;
    std::vector<VecI> points;

    SupportSet() = default;
    SupportSet(int d, std::vector<VecI> pts) : dim(d), points(std::move(pts)) {
        validate();
    }

    void validate() const {
        if (dim < 1) throw SchemaError("support set dimension must be >= 1");
        if (points.empty()) throw SchemaError("support set must be nonempty");
        std::set<VecI> seen;
        for (const VecI& p : points) {
            if (static_cast<int>(p.size()) != dim)
                throw SchemaError("support point has wrong dimension");
            if (!seen.insert(p).second)
                throw DuplicatePoint("duplicate support point " + to_string(p));
        }
    }

    size_t size() const { return points.size(); }
};

// One-dimensional exponent set, kept sorted and duplicate-free.
using BSet = std::vector<Int>;

inline BSet make_bset(std::vector<Int> values) {
    if (values.empty()) throw SchemaError("exponent set must be nonempty");
    std::sort(values.begin(), values.end());
    for (size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i] == values[i + 1])
            throw DuplicatePoint("duplicate exponent " + values[i].str());
    return values;
}

inline SupportSet bset_to_support(const BSet& b) {
    std::vector<VecI> pts;
    for (const Int& x : b) pts.push_back(VecI{x});
    return SupportSet(1, std::move(pts));
}

// Integer linear functional on Z^d.
struct Covector {
    VecI coords;

    Covector() = default;
    explicit Covector(VecI c) : coords(std::move(c)) {
        if (is_zero(coords)) throw SchemaError("covector must be nonzero");
    }

    bool is_primitive() const { return content(coords) == 1; }
    Int operator()(const VecI& p) const { return dot(coords, p); }
};

// Either a positive integer or the formal value INFINITE (rank-deficient
// projection).
struct LatticeIndex {
    bool infinite = false;
    Int value = 0;  // meaningful only when !infinite

    static LatticeIndex finite(Int v) { return LatticeIndex{false, std::move(v)}; }
    static LatticeIndex inf() { return LatticeIndex{true, 0}; }

    bool operator==(const LatticeIndex& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    bool is_one() const { return !infinite && value == 1; }
};

inline std::string to_string(const LatticeIndex& v) {
    return v.infinite ? std::string("INFINITE") : v.value.str();
}

// Sequence of vertical indices of successive crops in a fixed direction.
// Rank-deficient leading crops are recorded by count; the finite tail always
// ends with 1 and each finite entry divides its predecessor.
struct IotaSequence {
    int infinite_prefix = 0;
    std::vector<Int> values;  // finite entries, last one is 1
    Covector gamma;
};

// ---------------------------------------------------------------------------
// Integer matrix kernels / echelon forms
// ---------------------------------------------------------------------------

namespace detail {

// In-place integer row echelon by unimodular row operations. Returns the
// pivot columns in order. The row space (as a lattice) is preserved.
inline std::vector<int> row_echelon(std::vector<VecI>& rows) {
    if (rows.empty()) return {};
    const size_t ncols = rows[0].size();
    std::vector<int> pivot_cols;
    size_t pr = 0;  // next pivot row
    for (size_t col = 0; col < ncols && pr < rows.size(); ++col) {
        // Euclid among rows pr.. on this column until one nonzero remains.
        while (true) {
            size_t best = rows.size();
            for (size_t r = pr; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                if (best == rows.size() ||
                    abs(rows[r][col]) < abs(rows[best][col]))
                    best = r;
            }
            if (best == rows.size()) break;  // column zero below pr
            std::swap(rows[pr], rows[best]);
            bool others = false;
            for (size_t r = pr + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                Int q = floor_div(rows[r][col], rows[pr][col]);
                for (size_t c = 0; c < ncols; ++c) rows[r][c] -= q * rows[pr][c];
                if (rows[r][col] != 0) others = true;
            }
            if (!others) break;
        }
        if (rows[pr][col] != 0) {
            if (rows[pr][col] < 0)
                for (size_t c = 0; c < ncols; ++c) rows[pr][c] = -rows[pr][c];
            pivot_cols.push_back(static_cast<int>(col));
            ++pr;
        }
    }
    rows.resize(pr);
    return pivot_cols;
}

}  // namespace detail

inline int lattice_rank(std::vector<VecI> gens) {
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const VecI& v) { return is_zero(v); }),
               gens.end());
    if (gens.empty()) return 0;
    return static_cast<int>(detail::row_echelon(gens).size());
}

// Index of the lattice generated by `gens` inside Z^n; INFINITE when the
// generators span a proper subspace.
inline LatticeIndex lattice_index(std::vector<VecI> gens, int n) {
    if (n == 0) return LatticeIndex::finite(1);
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const VecI& v) { return is_zero(v); }),
               gens.end());
    for (const VecI& g : gens)
        internal_check(static_cast<int>(g.size()) == n, "lattice_index: dim");
    if (gens.empty()) return LatticeIndex::inf();
    std::vector<int> pivots = detail::row_echelon(gens);
    if (static_cast<int>(pivots.size()) < n) return LatticeIndex::inf();
    Int det = 1;
    for (size_t r = 0; r < gens.size(); ++r) det *= gens[r][pivots[r]];
    return LatticeIndex::finite(abs(det));
}

// Z-basis of { v in Z^d : M v = 0 } for the integer matrix with rows `mat`
// acting on Z^d. The result is automatically saturated.
inline std::vector<VecI> integer_kernel(const std::vector<VecI>& mat, int d) {
    // Work on A = transpose(mat) while tracking U with A = U * transpose(mat).
    std::vector<VecI> a(d), u(d);
    const size_t m = mat.size();
    for (int i = 0; i < d; ++i) {
        a[i].assign(m, Int(0));
        for (size_t r = 0; r < m; ++r) {
            internal_check(static_cast<int>(mat[r].size()) == d,
                           "integer_kernel: dim");
            a[i][r] = mat[r][i];
        }
        u[i].assign(d, Int(0));
        u[i][i] = 1;
    }
    // Row echelon on `a`, mirroring every operation on `u`.
    size_t pr = 0;
    for (size_t col = 0; col < m && pr < a.size(); ++col) {
        while (true) {
            size_t best = a.size();
            for (size_t r = pr; r < a.size(); ++r) {
                if (a[r][col] == 0) continue;
                if (best == a.size() || abs(a[r][col]) < abs(a[best][col]))
                    best = r;
            }
            if (best == a.size()) break;
            std::swap(a[pr], a[best]);
            std::swap(u[pr], u[best]);
            bool others = false;
            for (size_t r = pr + 1; r < a.size(); ++r) {
                if (a[r][col] == 0) continue;
                Int q = floor_div(a[r][col], a[pr][col]);
                for (size_t c = 0; c < m; ++c) a[r][c] -= q * a[pr][c];
                for (int c = 0; c < d; ++c) u[r][c] -= q * u[pr][c];
                if (a[r][col] != 0) others = true;
            }
            if (!others) break;
        }
        if (a[pr][col] != 0) ++pr;
    }
    std::vector<VecI> kernel;
    for (size_t r = pr; r < a.size(); ++r) {
        internal_check(is_zero(a[r]), "integer_kernel: echelon residue");
        kernel.push_back(u[r]);
    }
    return kernel;
}

// Basis of span_Q(gens) intersected with Z^d (a saturated sublattice basis).
inline std::vector<VecI> saturated_span_basis(const std::vector<VecI>& gens,
                                              int d) {
    std::vector<VecI> ortho = integer_kernel(gens, d);
    return integer_kernel(ortho, d);
}

// Coordinates of p in the given (independent) basis rows; requires p to lie
// in their rational span with integral coordinates (true for saturated bases
// and integer p in the span).
inline VecI coords_in_basis(const VecI& p, const std::vector<VecI>& basis) {
    const size_t r = basis.size();
    const size_t d = p.size();
    // Solve x * basis = p by Gaussian elimination over Q.
    std::vector<VecQ> m(r, VecQ(d + 1));
    for (size_t i = 0; i < r; ++i) {
        internal_check(basis[i].size() == d, "coords_in_basis: dim");
        for (size_t j = 0; j < d; ++j) m[i][j] = Rat(basis[i][j]);
    }
    // Transpose system: basis^T x = p  (d equations, r unknowns).
    std::vector<VecQ> sys(d, VecQ(r + 1));
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < r; ++j) sys[i][j] = Rat(basis[j][i]);
        sys[i][r] = Rat(p[i]);
    }
    std::vector<int> pivot_of_col(r, -1);
    size_t pr = 0;
    for (size_t col = 0; col < r && pr < d; ++col) {
        size_t sel = d;
        for (size_t row = pr; row < d; ++row)
            if (sys[row][col] != 0) { sel = row; break; }
        if (sel == d) continue;
        std::swap(sys[pr], sys[sel]);
        Rat piv = sys[pr][col];
        for (size_t c = col; c <= r; ++c) sys[pr][c] /= piv;
        for (size_t row = 0; row < d; ++row) {
            if (row == pr || sys[row][col] == 0) continue;
            Rat f = sys[row][col];
            for (size_t c = col; c <= r; ++c) sys[row][c] -= f * sys[pr][c];
        }
        pivot_of_col[col] = static_cast<int>(pr);
        ++pr;
    }
    for (size_t row = pr; row < d; ++row)
        internal_check(sys[row][r] == 0, "coords_in_basis: point outside span");
    VecI x(r, Int(0));
    for (size_t col = 0; col < r; ++col) {
        internal_check(pivot_of_col[col] >= 0, "coords_in_basis: dependent basis");
        Rat v = sys[pivot_of_col[col]][r];
        internal_check(is_integral(v), "coords_in_basis: non-integral coordinate");
        x[col] = to_integer(v);
    }
    return x;
}

// ---------------------------------------------------------------------------
// Support-set combinatorics
// ---------------------------------------------------------------------------

// GCD of all pairwise differences; 0 for a singleton (no constraint).
inline Int span_gcd(const BSet& b) {
    if (b.empty()) throw SchemaError("span_gcd of empty set");
    Int g = 0;
    for (const Int& x : b) g = gcd(g, x - b.front());
    return g;
}

inline Int span_gcd(const SupportSet& b) {
    if (b.dim != 1) throw SchemaError("span_gcd expects a one-dimensional set");
    BSet vals;
    for (const VecI& p : b.points) vals.push_back(p[0]);
    std::sort(vals.begin(), vals.end());
    return span_gcd(vals);
}

// gcd of the per-set spans with gcd(0,x) = x; 0 only if all are singletons.
inline Int tuple_span_gcd(const std::vector<BSet>& bs) {
    if (bs.empty()) throw SchemaError("tuple_span_gcd of empty list");
    Int g = 0;
    for (const BSet& b : bs) g = gcd(g, span_gcd(b));
    return g;
}

inline Int max_value(const Covector& gamma, const SupportSet& a) {
    Int best = gamma(a.points.front());
    for (const VecI& p : a.points) best = std::max(best, gamma(p));
    return best;
}

inline Int min_value(const Covector& gamma, const SupportSet& a) {
    Int best = gamma(a.points.front());
    for (const VecI& p : a.points) best = std::min(best, gamma(p));
    return best;
}

// Points within gamma-distance d of the gamma-maximal face.
inline SupportSet crop(const SupportSet& a, const Covector& gamma, const Int& d) {
    internal_check(d >= 0, "crop: negative depth");
    Int m = max_value(gamma, a);
    std::vector<VecI> pts;
    for (const VecI& p : a.points)
        if (gamma(p) >= m - d) pts.push_back(p);
    return SupportSet(a.dim, std::move(pts));
}

// Within-set difference generators of a tuple (all pairwise differences are
// generated by differences against the first point of each set).
inline std::vector<VecI> difference_generators(const std::vector<SupportSet>& as) {
    std::vector<VecI> gens;
    for (const SupportSet& a : as)
        for (size_t i = 1; i < a.points.size(); ++i)
            gens.push_back(sub(a.points[i], a.points[0]));
    return gens;
}

// Index in Z^n (n = dim - k) of the horizontal projection of the tuple's
// difference lattice; INFINITE when the projection has rank < n.
inline LatticeIndex vertical_index(const std::vector<SupportSet>& as, int k) {
    if (as.empty()) throw SchemaError("vertical_index of empty tuple");
    const int dim = as.front().dim;
    if (k < 0 || k >= dim)
        throw SchemaError("vertical_index: invalid vertical dimension count");
    const int n = dim - k;
    std::vector<VecI> gens;
    for (const SupportSet& a : as) {
        if (a.dim != dim) throw SchemaError("vertical_index: mixed dimensions");
        for (size_t i = 1; i < a.points.size(); ++i) {
            VecI d = sub(a.points[i], a.points[0]);
            d.resize(n);  // drop the last k (vertical) coordinates
            gens.push_back(std::move(d));
        }
    }
    return lattice_index(std::move(gens), n);
}

// Vertical indices of successive crops until the value 1 is reached.
inline IotaSequence iota_sequence(const std::vector<SupportSet>& as,
                                  const Covector& gamma, int k) {
    if (as.empty()) throw SchemaError("iota_sequence of empty tuple");
    Int width = 0;
    for (const SupportSet& a : as)
        width = std::max(width, max_value(gamma, a) - min_value(gamma, a));

    IotaSequence iota;
    iota.gamma = gamma;
    for (Int d = 0; d <= width; ++d) {
        std::vector<SupportSet> cropped;
        cropped.reserve(as.size());
        for (const SupportSet& a : as) cropped.push_back(crop(a, gamma, d));
        LatticeIndex ind = vertical_index(cropped, k);
        if (ind.infinite) {
            internal_check(iota.values.empty(),
                           "iota_sequence: infinite entry after a finite one");
            ++iota.infinite_prefix;
            continue;
        }
        if (!iota.values.empty())
            internal_check(iota.values.back() % ind.value == 0,
                           "iota_sequence: entry does not divide predecessor");
        iota.values.push_back(ind.value);
        if (ind.value == 1) return iota;
    }
    throw NonStabilizing(
        "vertical index of crops never reaches 1 within the direction width; "
        "the tuple's horizontal difference lattice is not the full lattice");
}

} // namespace tropsing
