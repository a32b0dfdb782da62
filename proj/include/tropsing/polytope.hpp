#pragma once

// Rational polytopes (ambient dimension <= 4) on top of the exact hull
// kernel: vertex/facet extraction, lattice-normalized volumes, Minkowski
// sums, mixed volumes (also relative to a rational subspace's lattice),
// fiber polygons of 3-polytopes and mixed fiber polygons of pairs.

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tropsing/errors.hpp"
#include "tropsing/hull.hpp"
#include "tropsing/lattice.hpp"
#include "tropsing/rational.hpp"

namespace tropsing {

namespace polydetail {

// Scale rational points by the least common denominator; returns integer
// points together with the denominator used.
inline std::pair<std::vector<VecI>, Int> scale_to_integers(const std::vector<VecQ>& pts) {
    Int denom = 1;
    for (const VecQ& p : pts)
        for (const Rat& c : p) denom = lcm(denom, den(c));
    std::vector<VecI> out;
    out.reserve(pts.size());
    for (const VecQ& p : pts) {
        VecI q(p.size());
        for (size_t i = 0; i < p.size(); ++i) {
            Rat scaled = p[i] * Rat(denom);
            internal_check(is_integral(scaled), "denominator clearing failed");
            q[i] = to_integer(scaled);
        }
        out.push_back(std::move(q));
    }
    return {out, denom};
}

inline VecQ unscale(const VecI& p, const Int& denom) {
    VecQ out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = Rat(p[i]) / Rat(denom);
    return out;
}

// Rational coordinates of p in the given integer basis (p must lie in the
// span). Plain Gaussian elimination over Q.
inline VecQ coords_in_basis_q(const VecQ& p, const std::vector<VecI>& basis, int d) {
    const int k = static_cast<int>(basis.size());
    std::vector<VecQ> m(d, VecQ(k + 1, Rat(0)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < k; ++j) m[i][j] = Rat(basis[j][i]);
        m[i][k] = p[i];
    }
    int row = 0;
    std::vector<int> pivot_of_col(k, -1);
    for (int col = 0; col < k && row < d; ++col) {
        int pr = -1;
        for (int r = row; r < d; ++r)
            if (m[r][col] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        for (int r = 0; r < d; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat factor = m[r][col] / m[row][col];
            for (int c = col; c <= k; ++c) m[r][c] -= factor * m[row][c];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    VecQ x(k, Rat(0));
    for (int col = 0; col < k; ++col)
        if (pivot_of_col[col] >= 0)
            x[col] = m[pivot_of_col[col]][k] / m[pivot_of_col[col]][col];
    // consistency: rows with no pivot must have zero rhs
    for (int r = row; r < d; ++r)
        internal_check(m[r][k] == 0, "point outside subspace in coordinate solve");
    return x;
}

} // namespace polydetail

struct PolyFacet {
    VecI normal;   // primitive integer, outward
    Rat offset;    // max of normal . x over the polytope
    std::vector<int> verts;  // indices into Polytope::vertices
};

class Polytope {
public:
    int dim = 0;   // ambient dimension
    int adim = 0;  // affine dimension
    std::vector<VecQ> vertices;      // extreme points, lexicographically sorted
    std::vector<PolyFacet> facets;   // full-dimensional case only

    // Affine-hull frame for the degenerate case (adim < dim):
    // point = frame_origin + sum coords[i] * frame_basis[i]; the basis is a
    // saturated lattice basis of the direction space, so facet data below is
    // expressed in lattice coordinates of the affine hull.
    VecQ frame_origin;
    std::vector<VecI> frame_basis;
    std::vector<PolyFacet> frame_facets;  // facets within the affine hull

    bool full_dim() const { return adim == dim; }
    bool is_lattice() const {
        for (const VecQ& v : vertices)
            for (const Rat& c : v)
                if (!is_integral(c)) return false;
        return true;
    }
    std::vector<VecI> lattice_vertices() const {
        std::vector<VecI> out;
        for (const VecQ& v : vertices) {
            VecI w(v.size());
            for (size_t i = 0; i < v.size(); ++i) {
                internal_check(is_integral(v[i]), "non-lattice vertex");
                w[i] = to_integer(v[i]);
            }
            out.push_back(std::move(w));
        }
        return out;
    }

    Rat volume_euclid_cache = Rat(0);  // Euclidean volume when full_dim()
};

inline Polytope convex_hull(const std::vector<VecQ>& pts, int d);

namespace polydetail {

inline Polytope hull_from_integer(const std::vector<VecI>& ipts, const Int& denom, int d) {
    HullResult h = compute_hull(ipts, d);
    Polytope P;
    P.dim = d;
    P.adim = h.adim;
    if (h.adim == 0) {
        P.vertices = {unscale(h.points[h.independent[0]], denom)};
        return P;
    }
    if (h.full_dim()) {
        std::vector<int> ext = h.extreme_indices();
        std::map<int, int> pos;
        for (int i : ext) {
            pos[i] = static_cast<int>(P.vertices.size());
            P.vertices.push_back(unscale(h.points[i], denom));
        }
        for (const HullFacet& f : h.merged_facets()) {
            PolyFacet pf;
            pf.normal = f.normal;
            pf.offset = Rat(f.offset) / Rat(denom);
            for (int v : f.verts)
                if (pos.count(v)) pf.verts.push_back(pos[v]);
            P.facets.push_back(std::move(pf));
        }
        P.volume_euclid_cache = h.volume_euclid() / Rat(boost::multiprecision::pow(denom, d));
        return P;
    }
    // Degenerate: reduce to the affine hull with a saturated lattice basis of
    // the direction space (scale-invariant), recurse, and map back.
    std::vector<VecI> gens;
    for (int i : h.independent)
        if (i != h.independent[0])
            gens.push_back(sub(h.points[i], h.points[h.independent[0]]));
    std::vector<VecI> basis = saturated_span_basis(gens, d);
    internal_check(static_cast<int>(basis.size()) == h.adim, "frame basis rank");
    VecQ origin = unscale(h.points[h.independent[0]], denom);
    std::vector<VecQ> reduced;
    for (const VecI& p : h.points) {
        VecQ rel(d);
        VecQ pq = unscale(p, denom);
        for (int i = 0; i < d; ++i) rel[i] = pq[i] - origin[i];
        reduced.push_back(coords_in_basis_q(rel, basis, d));
    }
    Polytope sub_poly = convex_hull(reduced, h.adim);
    internal_check(sub_poly.full_dim(), "reduced polytope not full-dimensional");
    P.frame_origin = origin;
    P.frame_basis = basis;
    P.frame_facets = sub_poly.facets;
    for (const VecQ& c : sub_poly.vertices) {
        VecQ v = origin;
        for (int j = 0; j < h.adim; ++j)
            for (int i = 0; i < d; ++i) v[i] += c[j] * Rat(basis[j][i]);
        P.vertices.push_back(std::move(v));
    }
    std::sort(P.vertices.begin(), P.vertices.end());
    return P;
}

} // namespace polydetail

inline Polytope convex_hull(const std::vector<VecQ>& pts, int d) {
    if (d < 1 || d > 4) throw DimensionUnsupported("polytope dimension must be 1..4");
    if (pts.empty()) throw SchemaError("convex hull of empty point set");
    auto [ipts, den] = polydetail::scale_to_integers(pts);
    return polydetail::hull_from_integer(ipts, den, d);
}

inline Polytope convex_hull_int(const std::vector<VecI>& pts, int d) {
    std::vector<VecQ> q;
    q.reserve(pts.size());
    for (const VecI& p : pts) q.push_back(to_vecq(p));
    return convex_hull(q, d);
}

inline Polytope polytope_of_support(const SupportSet& s) {
    return convex_hull_int(s.points, s.dim);
}

// Lattice-normalized volume: dim! times the Euclidean volume.
inline Rat lattice_volume(const Polytope& P) {
    if (!P.full_dim())
        throw NotFullDimensional("lattice volume requires a full-dimensional polytope");
    Int fact = 1;
    for (int i = 2; i <= P.dim; ++i) fact *= i;
    return P.volume_euclid_cache * Rat(fact);
}

inline Polytope minkowski_sum(const Polytope& A, const Polytope& B) {
    if (A.dim != B.dim) throw SchemaError("Minkowski sum of mismatched dimensions");
    std::vector<VecQ> sums;
    sums.reserve(A.vertices.size() * B.vertices.size());
    for (const VecQ& a : A.vertices)
        for (const VecQ& b : B.vertices) {
            VecQ s(a.size());
            for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
            sums.push_back(std::move(s));
        }
    return convex_hull(sums, A.dim);
}

// Lattice-normalized mixed volume of dim polytopes via inclusion-exclusion
// over Euclidean volumes of subset sums. Subset sums are built progressively
// (pairwise, pruning to vertices at each stage) to keep hulls small.
inline Int mixed_volume(const std::vector<Polytope>& Ps) {
    if (Ps.empty()) throw SchemaError("mixed volume of empty family");
    const int d = Ps[0].dim;
    if (d > 4) throw DimensionUnsupported("mixed volume supports dimension <= 4");
    if (static_cast<int>(Ps.size()) != d)
        throw SchemaError("mixed volume needs exactly dim polytopes");
    for (const Polytope& P : Ps)
        if (P.dim != d) throw SchemaError("mixed volume of mismatched dimensions");

    const int full = (1 << d) - 1;
    std::vector<std::optional<Polytope>> sum_of(full + 1);
    Rat acc(0);
    for (int mask = 1; mask <= full; ++mask) {
        int low_idx = 0;
        while (!((mask >> low_idx) & 1)) ++low_idx;
        int rest = mask & (mask - 1);
        if (rest == 0) {
            sum_of[mask] = Ps[low_idx];
        } else {
            sum_of[mask] = minkowski_sum(*sum_of[rest], Ps[low_idx]);
        }
        Rat vol = sum_of[mask]->full_dim() ? sum_of[mask]->volume_euclid_cache : Rat(0);
        int bits = 0;
        for (int b = 0; b < d; ++b) bits += (mask >> b) & 1;
        if ((d - bits) % 2 == 0)
            acc += vol;
        else
            acc -= vol;
    }
    internal_check(is_integral(acc), "mixed volume of lattice polytopes must be integral");
    Int result = to_integer(acc);
    internal_check(result >= 0, "mixed volume must be nonnegative");
    return result;
}

// Mixed volume of k polytopes lying in parallel k-dimensional affine
// subspaces of Q^d, normalized by the induced lattice (intersection of the
// common direction space with Z^d). Joint direction rank below k gives 0;
// above k is an input error.
inline Int sublattice_mixed_volume(const std::vector<Polytope>& Ps, int d) {
    if (Ps.empty()) throw SchemaError("mixed volume of empty family");
    const int k = static_cast<int>(Ps.size());
    for (const Polytope& P : Ps)
        if (P.dim != d) throw SchemaError("sublattice mixed volume dimension mismatch");
    std::vector<VecQ> dir_gens_q;
    for (const Polytope& P : Ps) {
        const VecQ& v0 = P.vertices.front();
        for (const VecQ& v : P.vertices) {
            VecQ diff(v.size());
            for (size_t i = 0; i < v.size(); ++i) diff[i] = v[i] - v0[i];
            dir_gens_q.push_back(std::move(diff));
        }
    }
    auto [dir_gens, den] = polydetail::scale_to_integers(dir_gens_q);
    (void)den;  // direction span is scale-invariant
    int r = lattice_rank(dir_gens);
    if (r < k) return 0;
    if (r > k) throw NotCoplanar("polytopes span more than the expected subspace");
    std::vector<VecI> basis = saturated_span_basis(dir_gens, d);
    internal_check(static_cast<int>(basis.size()) == k, "sublattice basis rank");
    std::vector<Polytope> reduced;
    for (const Polytope& P : Ps) {
        const VecQ& v0 = P.vertices.front();
        std::vector<VecQ> coords;
        for (const VecQ& v : P.vertices) {
            VecQ diff(v.size());
            for (size_t i = 0; i < v.size(); ++i) diff[i] = v[i] - v0[i];
            coords.push_back(polydetail::coords_in_basis_q(diff, basis, d));
        }
        reduced.push_back(convex_hull(coords, k));
    }
    return mixed_volume(reduced);
}

// ---------------------------------------------------------------------------
// Exact rational polygons with edge-direction arithmetic, used by the fiber
// polygon machinery. Vertices are counterclockwise from the lexicographic
// minimum; degenerate polygons have one (point) or two (segment) vertices.

struct Polygon2 {
    std::vector<VecQ> verts;

    struct Edge {
        VecI dir;  // primitive integer direction
        Rat len;   // positive scalar: edge vector = len * dir
    };

    bool is_point() const { return verts.size() == 1; }

    static Polygon2 from_points(std::vector<VecQ> pts);

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        const size_t n = verts.size();
        if (n <= 1) return out;
        const size_t count = (n == 2) ? 2 : n;  // segment: there and back
        for (size_t i = 0; i < count; ++i) {
            const VecQ& a = verts[i % n];
            const VecQ& b = verts[(i + 1) % n];
            VecQ diff{b[0] - a[0], b[1] - a[1]};
            Int denom = lcm(den(diff[0]), den(diff[1]));
            VecI idir{to_integer(diff[0] * Rat(denom)), to_integer(diff[1] * Rat(denom))};
            VecI pdir = primitive(idir);
            Rat len = (pdir[0] != 0) ? diff[0] / Rat(pdir[0]) : diff[1] / Rat(pdir[1]);
            internal_check(len > 0, "edge length must be positive");
            out.push_back(Edge{pdir, len});
        }
        return out;
    }

    // Twice the Euclidean area (the lattice-normalized area for dimension 2).
    Rat lattice_area() const {
        if (verts.size() < 3) return Rat(0);
        Rat acc(0);
        for (size_t i = 0; i < verts.size(); ++i) {
            const VecQ& a = verts[i];
            const VecQ& b = verts[(i + 1) % verts.size()];
            acc += a[0] * b[1] - b[0] * a[1];
        }
        return abs(acc);
    }

    Polygon2 translated(const VecQ& t) const {
        Polygon2 out = *this;
        for (VecQ& v : out.verts) {
            v[0] += t[0];
            v[1] += t[1];
        }
        return out;
    }

    // Translate so the minimum coordinate in each axis is zero.
    Polygon2 normalized() const {
        Rat mx = verts[0][0], my = verts[0][1];
        for (const VecQ& v : verts) {
            mx = std::min(mx, v[0]);
            my = std::min(my, v[1]);
        }
        return translated(VecQ{-mx, -my});
    }
};

namespace polydetail {

inline Rat cross2(const VecQ& o, const VecQ& a, const VecQ& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Angular order over primitive directions, counterclockwise starting just
// past straight-down: right half-plane (including straight up) first. This
// matches a counterclockwise walk that starts at the lexicographic minimum
// vertex.
struct AngularLess {
    bool operator()(const VecI& a, const VecI& b) const {
        auto half = [](const VecI& v) { return (v[0] > 0 || (v[0] == 0 && v[1] > 0)) ? 0 : 1; };
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Int cr = a[0] * b[1] - a[1] * b[0];
        if (cr != 0) return cr > 0;
        return a < b;  // equal directions only when identical (primitive)
    }
};

using EdgeMap = std::map<VecI, Rat, AngularLess>;

inline EdgeMap edge_map(const Polygon2& p) {
    EdgeMap m;
    for (const Polygon2::Edge& e : p.edges()) m[e.dir] += e.len;
    return m;
}

inline VecQ lexmin_vertex(const Polygon2& p) {
    return *std::min_element(p.verts.begin(), p.verts.end());
}

// Rebuild a polygon from an angular edge map and a starting (lexicographic
// minimum) vertex.
inline Polygon2 polygon_from_edges(const EdgeMap& m, VecQ start) {
    Polygon2 out;
    if (m.empty()) {
        out.verts = {std::move(start)};
        return out;
    }
    VecQ cur = start;
    for (const auto& [dir, len] : m) {
        internal_check(len > 0, "edge map with nonpositive length");
        out.verts.push_back(cur);
        cur = VecQ{cur[0] + len * Rat(dir[0]), cur[1] + len * Rat(dir[1])};
    }
    internal_check(cur == start, "edge walk does not close");
    if (out.verts.size() == 3 && m.size() == 2) {
        // a segment walks out and back; keep the two endpoints
        out.verts.pop_back();
    }
    return out;
}

} // namespace polydetail

inline Polygon2 Polygon2::from_points(std::vector<VecQ> pts) {
    internal_check(!pts.empty(), "polygon from empty point set");
    for (const VecQ& p : pts)
        internal_check(p.size() == 2, "polygon points must be planar");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Polygon2 out;
    if (pts.size() == 1) {
        out.verts = pts;
        return out;
    }
    std::vector<VecQ> lower, upper;
    for (const VecQ& p : pts) {
        while (lower.size() >= 2 &&
               polydetail::cross2(lower[lower.size() - 2], lower.back(), p) <= 0)
            lower.pop_back();
        lower.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (upper.size() >= 2 &&
               polydetail::cross2(upper[upper.size() - 2], upper.back(), *it) <= 0)
            upper.pop_back();
        upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    out.verts = lower;
    out.verts.insert(out.verts.end(), upper.begin(), upper.end());
    if (out.verts.size() == 2 && out.verts[0] == out.verts[1]) out.verts.pop_back();
    return out;
}

inline Polygon2 minkowski_sum(const Polygon2& a, const Polygon2& b) {
    if (a.is_point()) return b.translated(a.verts[0]);
    if (b.is_point()) return a.translated(b.verts[0]);
    polydetail::EdgeMap m = polydetail::edge_map(a);
    for (const auto& [dir, len] : polydetail::edge_map(b)) m[dir] += len;
    VecQ start = polydetail::lexmin_vertex(a);
    const VecQ sb = polydetail::lexmin_vertex(b);
    start[0] += sb[0];
    start[1] += sb[1];
    return polydetail::polygon_from_edges(m, std::move(start));
}

inline Polygon2 scale(const Polygon2& p, const Rat& lambda) {
    internal_check(lambda >= 0, "polygon scaling must be nonnegative");
    if (lambda == 0) {
        Polygon2 out;
        out.verts = {VecQ{Rat(0), Rat(0)}};
        return out;
    }
    Polygon2 out = p;
    for (VecQ& v : out.verts) {
        v[0] *= lambda;
        v[1] *= lambda;
    }
    return out;
}

// Minkowski difference a - b for polygons where b is a summand of a;
// otherwise NotASummand. The result is pinned with its lexicographic minimum
// vertex at the difference of the inputs' minima.
inline Polygon2 minkowski_difference(const Polygon2& a, const Polygon2& b) {
    polydetail::EdgeMap m = polydetail::edge_map(a);
    for (const auto& [dir, len] : polydetail::edge_map(b)) {
        auto it = m.find(dir);
        if (it == m.end() || it->second < len)
            throw NotASummand("polygon is not a Minkowski summand");
        it->second -= len;
        if (it->second == 0) m.erase(it);
    }
    VecQ start = polydetail::lexmin_vertex(a);
    const VecQ sb = polydetail::lexmin_vertex(b);
    start[0] -= sb[0];
    start[1] -= sb[1];
    return polydetail::polygon_from_edges(m, std::move(start));
}

inline Polytope polytope_of_polygon(const Polygon2& p) {
    return convex_hull(p.verts, 2);
}

inline Polygon2 polygon_of_polytope(const Polytope& P) {
    internal_check(P.dim == 2, "polygon conversion needs a planar polytope");
    return Polygon2::from_points(P.vertices);
}

// ---------------------------------------------------------------------------
// Fiber polygons.

// Slice of a 3-polytope (given by its vertices) at base coordinate value t,
// projected to the two non-base coordinates in increasing index order.
namespace polydetail {

inline Polygon2 slice_at(const std::vector<VecQ>& verts, int base_axis, const Rat& t) {
    const int o1 = (base_axis == 0) ? 1 : 0;
    const int o2 = (base_axis == 2) ? 1 : 2;
    std::vector<VecQ> pts;
    for (const VecQ& v : verts)
        if (v[base_axis] == t) pts.push_back(VecQ{v[o1], v[o2]});
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = 0; j < verts.size(); ++j) {
            const VecQ& v = verts[i];
            const VecQ& w = verts[j];
            if (!(v[base_axis] < t && t < w[base_axis])) continue;
            Rat s = (t - v[base_axis]) / (w[base_axis] - v[base_axis]);
            pts.push_back(VecQ{v[o1] + s * (w[o1] - v[o1]), v[o2] + s * (w[o2] - v[o2])});
        }
    internal_check(!pts.empty(), "empty slice inside base range");
    return Polygon2::from_points(std::move(pts));
}

} // namespace polydetail

// Minkowski integral of the slices of P over the base axis. Slices
// interpolate Minkowski-linearly between consecutive vertex levels, so the
// integral is a weighted Minkowski sum of chamber-endpoint slices. Flat or
// lower-dimensional input is fine; a base range of zero width integrates to
// a point.
inline Polygon2 fiber_polygon(const Polytope& P, int base_axis = 0) {
    if (P.dim != 3) throw DimensionUnsupported("fiber polygon needs a 3-polytope");
    if (base_axis < 0 || base_axis > 2) throw SchemaError("base axis must be 0..2");
    std::vector<Rat> xs;
    for (const VecQ& v : P.vertices) xs.push_back(v[base_axis]);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    Polygon2 acc;
    acc.verts = {VecQ{Rat(0), Rat(0)}};
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        Rat w = xs[i + 1] - xs[i];
        Polygon2 piece = minkowski_sum(polydetail::slice_at(P.vertices, base_axis, xs[i]),
                                       polydetail::slice_at(P.vertices, base_axis, xs[i + 1]));
        acc = minkowski_sum(acc, scale(piece, w / Rat(2)));
    }
    return acc;
}

// Mixed fiber polygon of a pair: the fiber polygon of the Minkowski sum with
// both individual fiber polygons subtracted (edge-length arithmetic), then
// translated so the minimum coordinates are zero.
inline Polygon2 mixed_fiber_polygon(const Polytope& P, const Polytope& Q, int base_axis = 0) {
    Polygon2 fib_sum = fiber_polygon(minkowski_sum(P, Q), base_axis);
    Polygon2 res = minkowski_difference(fib_sum, fiber_polygon(P, base_axis));
    res = minkowski_difference(res, fiber_polygon(Q, base_axis));
    return res.normalized();
}

} // namespace tropsing
