#pragma once

// Exact incremental convex hull over integer points in dimension <= 4.
// The boundary is maintained as a simplicial complex (coplanar patches are
// triangulated); consumers merge simplices by supporting hyperplane to get
// true facets, extract extreme points, or accumulate volumes.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "tropsing/errors.hpp"
#include "tropsing/lattice.hpp"
#include "tropsing/rational.hpp"

namespace tropsing {

namespace hulldetail {

inline Int det1(const Int& a) { return a; }

inline Int det2(const Int& a, const Int& b, const Int& c, const Int& d) {
    return a * d - b * c;
}

inline Int det3(const std::array<std::array<Int, 3>, 3>& m) {
    return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) -
           m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
           m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

// determinant of a k x k integer matrix, k <= 4, by cofactor expansion
inline Int detN(const std::vector<VecI>& rows) {
    const size_t k = rows.size();
    if (k == 0) return 1;
    if (k == 1) return rows[0][0];
    if (k == 2) return det2(rows[0][0], rows[0][1], rows[1][0], rows[1][1]);
    if (k == 3) {
        std::array<std::array<Int, 3>, 3> m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = rows[i][j];
        return det3(m);
    }
    internal_check(k == 4, "detN supports k <= 4");
    Int acc = 0;
    for (int col = 0; col < 4; ++col) {
        std::array<std::array<Int, 3>, 3> m;
        for (int i = 1; i < 4; ++i) {
            int cc = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == col) continue;
                m[i - 1][cc++] = rows[i][j];
            }
        }
        Int term = rows[0][col] * det3(m);
        acc += (col % 2 == 0) ? term : -term;
    }
    return acc;
}

// Normal to the hyperplane spanned by d-1 vectors in Z^d (cofactor vector).
inline VecI cross_general(const std::vector<VecI>& vs, int d) {
    internal_check(static_cast<int>(vs.size()) == d - 1, "cross_general arity");
    VecI n(d);
    for (int i = 0; i < d; ++i) {
        std::vector<VecI> minor(d - 1, VecI(d - 1));
        for (int r = 0; r < d - 1; ++r) {
            int cc = 0;
            for (int c = 0; c < d; ++c) {
                if (c == i) continue;
                minor[r][cc++] = vs[r][c];
            }
        }
        Int m = detN(minor);
        n[i] = (i % 2 == 0) ? m : -m;
    }
    return n;
}

} // namespace hulldetail

struct HullSimplex {
    std::array<int, 4> v{};  // ascending point indices, first `nv` used
    int nv = 0;
    VecI normal;  // primitive, outward
    Int offset;   // max of normal . x over the hull
    bool alive = true;
};

struct HullFacet {
    VecI normal;  // primitive, outward
    Int offset;
    std::vector<int> verts;  // ascending point indices on the hyperplane
};

struct HullResult {
    int dim = 0;
    int adim = 0;
    std::vector<VecI> points;      // deduplicated, lexicographically sorted
    std::vector<int> independent;  // adim+1 affinely independent point indices
    std::vector<HullSimplex> boundary;  // alive simplicial facets (full-dim only)

    bool full_dim() const { return adim == dim; }

    // Euclidean volume (full-dimensional case), via a star decomposition
    // from one boundary vertex.
    Rat volume_euclid() const {
        internal_check(full_dim(), "volume of non-full-dimensional hull");
        if (dim == 0) return Rat(0);
        internal_check(!boundary.empty(), "hull with empty boundary");
        const VecI& v0 = points[boundary.front().v[0]];
        Int acc = 0;
        for (const HullSimplex& f : boundary) {
            bool contains_v0 = false;
            for (int i = 0; i < f.nv; ++i)
                if (points[f.v[i]] == v0) contains_v0 = true;
            if (contains_v0) continue;
            std::vector<VecI> rows;
            for (int i = 0; i < f.nv; ++i)
                rows.push_back(sub(points[f.v[i]], v0));
            acc += abs(hulldetail::detN(rows));
        }
        Int fact = 1;
        for (int i = 2; i <= dim; ++i) fact *= i;
        return Rat(acc) / Rat(fact);
    }

    // Simplicial boundary merged into genuine facets by supporting hyperplane.
    std::vector<HullFacet> merged_facets() const {
        internal_check(full_dim(), "facets of non-full-dimensional hull");
        std::map<std::pair<VecI, Int>, std::set<int>> groups;
        for (const HullSimplex& f : boundary) {
            auto& g = groups[{f.normal, f.offset}];
            for (int i = 0; i < f.nv; ++i) g.insert(f.v[i]);
        }
        std::vector<HullFacet> out;
        for (auto& [key, verts] : groups)
            out.push_back(HullFacet{key.first, key.second,
                                    std::vector<int>(verts.begin(), verts.end())});
        return out;
    }

    // Extreme points: a boundary point is a vertex exactly when the normals
    // of the facets through it span the full ambient space.
    std::vector<int> extreme_indices() const {
        if (dim == 0 || points.size() == 1) return {0};
        internal_check(full_dim(), "extreme points of non-full-dimensional hull");
        std::map<int, std::vector<VecI>> incident;
        for (const HullFacet& f : merged_facets())
            for (int v : f.verts) incident[v].push_back(f.normal);
        std::vector<int> out;
        for (auto& [v, normals] : incident)
            if (lattice_rank(normals) == dim) out.push_back(v);
        return out;
    }
};

namespace hulldetail {

inline HullResult hull_dim1(std::vector<VecI> pts) {
    HullResult res;
    res.dim = 1;
    res.points = std::move(pts);
    if (res.points.size() == 1) {
        res.adim = 0;
        res.independent = {0};
        return res;
    }
    res.adim = 1;
    res.independent = {0, static_cast<int>(res.points.size()) - 1};
    HullSimplex lo;
    lo.v[0] = 0;
    lo.nv = 1;
    lo.normal = VecI{Int(-1)};
    lo.offset = -res.points.front()[0];
    HullSimplex hi;
    hi.v[0] = static_cast<int>(res.points.size()) - 1;
    hi.nv = 1;
    hi.normal = VecI{Int(1)};
    hi.offset = res.points.back()[0];
    res.boundary = {lo, hi};
    return res;
}

} // namespace hulldetail

// Convex hull of integer points, d <= 4. Degenerate input (affine dimension
// below d) is detected and returned without boundary data; callers reduce to
// the affine hull and recurse.
inline HullResult compute_hull(std::vector<VecI> pts, int d) {
    if (d < 1 || d > 4) throw DimensionUnsupported("hull dimension must be 1..4");
    if (pts.empty()) throw SchemaError("hull of empty point set");
    for (const VecI& p : pts)
        if (static_cast<int>(p.size()) != d)
            throw SchemaError("hull point of wrong dimension");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (d == 1) return hulldetail::hull_dim1(std::move(pts));

    HullResult res;
    res.dim = d;
    res.points = std::move(pts);
    const auto& P = res.points;
    const int n = static_cast<int>(P.size());

    // Greedy affinely independent subset.
    res.independent = {0};
    std::vector<VecI> diffs;
    for (int i = 1; i < n && static_cast<int>(res.independent.size()) <= d; ++i) {
        std::vector<VecI> trial = diffs;
        trial.push_back(sub(P[i], P[0]));
        if (lattice_rank(trial) > static_cast<int>(diffs.size())) {
            diffs = std::move(trial);
            res.independent.push_back(i);
        }
    }
    res.adim = static_cast<int>(res.independent.size()) - 1;
    if (res.adim < d) return res;  // degenerate: caller reduces dimension

    // Orientation reference: (d+1) * centroid of the initial simplex.
    VecI refsum(d, Int(0));
    for (int idx : res.independent) refsum = add(refsum, P[idx]);

    auto make_simplex = [&](std::array<int, 4> vs) {
        HullSimplex f;
        std::sort(vs.begin(), vs.begin() + d);
        f.v = vs;
        f.nv = d;
        std::vector<VecI> rows;
        for (int i = 1; i < d; ++i) rows.push_back(sub(P[vs[i]], P[vs[0]]));
        f.normal = primitive(hulldetail::cross_general(rows, d));
        internal_check(!is_zero(f.normal), "degenerate boundary simplex");
        f.offset = dot(f.normal, P[vs[0]]);
        Int side = dot(f.normal, refsum) - Int(d + 1) * f.offset;
        internal_check(side != 0, "orientation reference on facet plane");
        if (side > 0) {
            f.normal = negate(f.normal);
            f.offset = -f.offset;
        }
        return f;
    };

    // Initial simplex boundary: all d-subsets of the d+1 independent points.
    for (int skip = 0; skip <= d; ++skip) {
        std::array<int, 4> vs{};
        int c = 0;
        for (int i = 0; i <= d; ++i)
            if (i != skip) vs[c++] = res.independent[i];
        res.boundary.push_back(make_simplex(vs));
    }

    std::set<int> used(res.independent.begin(), res.independent.end());
    for (int p = 0; p < n; ++p) {
        if (used.count(p)) continue;
        // Visible facets (strictly beyond).
        std::vector<int> visible;
        for (size_t fi = 0; fi < res.boundary.size(); ++fi) {
            const HullSimplex& f = res.boundary[fi];
            if (!f.alive) continue;
            if (dot(f.normal, P[p]) > f.offset) visible.push_back(static_cast<int>(fi));
        }
        if (visible.empty()) continue;  // inside or on the boundary: not extreme

        // Horizon ridges: ridges of visible facets counted exactly once.
        std::map<std::vector<int>, int> ridge_count;
        for (int fi : visible) {
            const HullSimplex& f = res.boundary[fi];
            for (int skip = 0; skip < f.nv; ++skip) {
                std::vector<int> ridge;
                for (int i = 0; i < f.nv; ++i)
                    if (i != skip) ridge.push_back(f.v[i]);
                ridge_count[ridge] += 1;
            }
        }
        for (int fi : visible) res.boundary[fi].alive = false;
        for (auto& [ridge, cnt] : ridge_count) {
            internal_check(cnt <= 2, "ridge shared by more than two facets");
            if (cnt != 1) continue;
            std::array<int, 4> vs{};
            for (size_t i = 0; i < ridge.size(); ++i) vs[i] = ridge[i];
            vs[d - 1] = p;
            res.boundary.push_back(make_simplex(vs));
        }
        // Periodic compaction keeps visibility scans proportional to the
        // live boundary.
        if (res.boundary.size() > 64 &&
            static_cast<long>(res.boundary.size()) >
                4 * std::count_if(res.boundary.begin(), res.boundary.end(),
                                  [](const HullSimplex& f) { return f.alive; })) {
            std::vector<HullSimplex> live;
            for (HullSimplex& f : res.boundary)
                if (f.alive) live.push_back(std::move(f));
            res.boundary = std::move(live);
        }
    }
    std::vector<HullSimplex> live;
    for (HullSimplex& f : res.boundary)
        if (f.alive) live.push_back(std::move(f));
    res.boundary = std::move(live);
    return res;
}

} // namespace tropsing
