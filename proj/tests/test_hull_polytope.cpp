#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "tropsing/polytope.hpp"

using namespace tropsing;

namespace {

VecI ipt(std::initializer_list<long long> cs) {
    VecI v;
    for (long long c : cs) v.push_back(Int(c));
    return v;
}

VecQ qpt(std::initializer_list<long long> cs) {
    VecQ v;
    for (long long c : cs) v.push_back(Rat(c));
    return v;
}

Polytope hull_of(std::vector<std::vector<long long>> pts, int d) {
    std::vector<VecI> v;
    for (auto& p : pts) {
        VecI q;
        for (long long c : p) q.push_back(Int(c));
        v.push_back(std::move(q));
    }
    return convex_hull_int(v, d);
}

std::vector<VecI> sorted_normals(const Polytope& P) {
    std::vector<VecI> out;
    for (const PolyFacet& f : P.facets) out.push_back(f.normal);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VecQ> sorted_poly(const Polygon2& p) {
    std::vector<VecQ> v = p.verts;
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<VecQ> sorted_qverts(std::vector<std::vector<long long>> pts) {
    std::vector<VecQ> v;
    for (auto& p : pts) {
        VecQ q;
        for (long long c : p) q.push_back(Rat(c));
        v.push_back(std::move(q));
    }
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("square with interior point has four vertices") {
    Polytope P = hull_of({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 0}}, 2);
    REQUIRE(P.full_dim());
    REQUIRE(P.vertices.size() == 4);
    REQUIRE(P.facets.size() == 4);
    REQUIRE(lattice_volume(P) == Rat(2));

    Polytope Q = convex_hull({qpt({0, 0}), qpt({2, 0}), qpt({0, 2}), qpt({2, 2}),
                              VecQ{Rat(1), Rat(1)}},
                             2);
    REQUIRE(Q.vertices.size() == 4);
    REQUIRE(lattice_volume(Q) == Rat(8));
}

TEST_CASE("collinear points reduce to a segment with a lattice frame") {
    Polytope P = hull_of({{0, 0}, {1, 1}, {2, 2}}, 2);
    REQUIRE(P.adim == 1);
    REQUIRE_FALSE(P.full_dim());
    REQUIRE(P.vertices == sorted_qverts({{0, 0}, {2, 2}}));
    REQUIRE(P.frame_basis.size() == 1);
    REQUIRE(P.frame_basis[0] == ipt({1, 1}));
    REQUIRE_THROWS_AS(lattice_volume(P), NotFullDimensional);
}

TEST_CASE("one-dimensional hull keeps the endpoints") {
    Polytope P = hull_of({{3}, {7}, {5}}, 1);
    REQUIRE(P.full_dim());
    REQUIRE(P.vertices == sorted_qverts({{3}, {7}}));
    REQUIRE(lattice_volume(P) == Rat(4));
}

TEST_CASE("simplex and cube volumes in three dimensions") {
    Polytope S = hull_of({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    REQUIRE(lattice_volume(S) == Rat(1));
    REQUIRE(S.facets.size() == 4);

    std::vector<std::vector<long long>> cube;
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y)
            for (int z = 0; z <= 1; ++z) cube.push_back({x, y, z});
    cube.push_back({1, 1, 0});  // duplicate
    Polytope C = hull_of(cube, 3);
    REQUIRE(C.vertices.size() == 8);
    REQUIRE(C.facets.size() == 6);
    REQUIRE(lattice_volume(C) == Rat(6));
}

TEST_CASE("four-dimensional simplex with interior point") {
    Polytope P = hull_of({{0, 0, 0, 0},
                          {4, 0, 0, 0},
                          {0, 4, 0, 0},
                          {0, 0, 4, 0},
                          {0, 0, 0, 4},
                          {1, 1, 1, 1}},
                         4);
    REQUIRE(P.full_dim());
    REQUIRE(P.vertices.size() == 5);
    REQUIRE(P.facets.size() == 5);
    REQUIRE(lattice_volume(P) == Rat(256));
}

TEST_CASE("rational vertices are scaled exactly") {
    std::vector<VecQ> pts = {VecQ{Rat(1, 2), Rat(0)}, VecQ{Rat(0), Rat(1, 2)},
                             VecQ{Rat(1, 2), Rat(1, 2)}, VecQ{Rat(0), Rat(0)}};
    Polytope P = convex_hull(pts, 2);
    REQUIRE(P.vertices.size() == 4);
    REQUIRE(lattice_volume(P) == Rat(1, 2));
}

TEST_CASE("hull input validation") {
    REQUIRE_THROWS_AS(convex_hull({}, 2), SchemaError);
    REQUIRE_THROWS_AS(hull_of({{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}}, 5), DimensionUnsupported);
    REQUIRE_THROWS_AS(hull_of({{0, 0}, {1}}, 2), SchemaError);
}

TEST_CASE("Minkowski sum of two flat triangles in space") {
    Polytope P1 = hull_of({{0, 0, 0}, {2, 0, 0}, {0, 1, 0}}, 3);
    Polytope P2 = hull_of({{0, 0, 0}, {3, 0, 0}, {0, 0, 1}}, 3);
    REQUIRE(P1.adim == 2);
    REQUIRE(P2.adim == 2);
    Polytope S = minkowski_sum(P1, P2);
    REQUIRE(S.full_dim());
    REQUIRE(S.vertices.size() == 7);
    std::vector<VecI> expected = {ipt({-1, 0, 0}), ipt({0, -1, 0}), ipt({0, 0, -1}),
                                  ipt({0, 0, 1}),  ipt({0, 1, 0}),  ipt({1, 2, 3})};
    std::sort(expected.begin(), expected.end());
    REQUIRE(sorted_normals(S) == expected);
}

TEST_CASE("mixed volume in the plane") {
    Polytope T = hull_of({{0, 0}, {1, 0}, {0, 1}}, 2);
    REQUIRE(mixed_volume({T, T}) == Int(1));

    Polytope R2 = hull_of({{0, 0}, {2, 0}, {0, 2}, {2, 2}}, 2);
    Polytope R3 = hull_of({{0, 0}, {3, 0}, {0, 3}, {3, 3}}, 2);
    REQUIRE(mixed_volume({R2, R3}) == Int(12));
    REQUIRE(mixed_volume({R3, R2}) == Int(12));

    Polytope Sx = hull_of({{0, 0}, {1, 0}}, 2);
    Polytope Sy = hull_of({{0, 0}, {0, 1}}, 2);
    REQUIRE(mixed_volume({Sx, Sy}) == Int(1));
    REQUIRE(mixed_volume({Sx, Sx}) == Int(0));
}

TEST_CASE("mixed volume properties in space") {
    Polytope segx = hull_of({{0, 0, 0}, {1, 0, 0}}, 3);
    Polytope Tyz = hull_of({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    REQUIRE(mixed_volume({segx, Tyz, Tyz}) == Int(1));
    REQUIRE(mixed_volume({segx, segx, Tyz}) == Int(0));

    std::vector<std::vector<long long>> cube;
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y)
            for (int z = 0; z <= 1; ++z) cube.push_back({x, y, z});
    Polytope C = hull_of(cube, 3);
    REQUIRE(mixed_volume({C, C, C}) == Int(6));

    Polytope P1 = hull_of({{0, 0, 0}, {2, 0, 0}, {0, 1, 0}}, 3);
    Polytope P2 = hull_of({{0, 0, 0}, {3, 0, 0}, {0, 0, 1}}, 3);
    Polytope S = minkowski_sum(P1, P2);
    REQUIRE(mixed_volume({P1, P2, S}) == Int(5));

    // multilinearity in the last argument
    Int lhs = mixed_volume({P1, P2, S});
    Int rhs = mixed_volume({P1, P2, P1}) + mixed_volume({P1, P2, P2});
    REQUIRE(lhs == rhs);

    // translation invariance
    std::vector<VecQ> moved;
    for (const VecQ& v : P2.vertices)
        moved.push_back(VecQ{v[0] + Rat(5), v[1] - Rat(2), v[2] + Rat(1)});
    Polytope P2t = convex_hull(moved, 3);
    REQUIRE(mixed_volume({P1, P2t, S}) == mixed_volume({P1, P2, S}));
}

TEST_CASE("mixed volume of embedded supports in four dimensions") {
    auto j1 = [](std::vector<long long> a) {
        return std::vector<long long>{a[0], 0, a[1], a[2]};
    };
    auto j2 = [](std::vector<long long> a) {
        return std::vector<long long>{0, a[0], -a[1], -a[2]};
    };
    std::vector<std::vector<long long>> A1 = {{0, 0, 0}, {2, 0, 0}, {0, 1, 0}};
    std::vector<std::vector<long long>> A2 = {{0, 0, 0}, {3, 0, 0}, {0, 0, 1}};
    auto lift = [&](auto& A, auto&& j) {
        std::vector<std::vector<long long>> out;
        for (auto& a : A) out.push_back(j(a));
        return out;
    };
    Polytope Q1 = hull_of(lift(A1, j1), 4);
    Polytope Q2 = hull_of(lift(A2, j1), 4);
    Polytope Q3 = hull_of(lift(A1, j2), 4);
    Polytope Q4 = hull_of(lift(A2, j2), 4);
    REQUIRE(mixed_volume({Q1, Q2, Q3, Q4}) == Int(12));
}

TEST_CASE("mixed volume validation") {
    Polytope T = hull_of({{0, 0}, {1, 0}, {0, 1}}, 2);
    REQUIRE_THROWS_AS(mixed_volume({T}), SchemaError);
    REQUIRE_THROWS_AS(mixed_volume(std::vector<Polytope>{}), SchemaError);
}

TEST_CASE("mixed volume relative to the induced lattice") {
    Polytope Px = hull_of({{0, 0, 0}, {2, 0, 0}}, 3);
    Polytope Py = hull_of({{0, 0, 0}, {0, 3, 0}}, 3);
    REQUIRE(sublattice_mixed_volume({Px, Py}, 3) == Int(6));

    // parallel segments span too little: zero
    Polytope Px2 = hull_of({{1, 1, 0}, {4, 1, 0}}, 3);
    REQUIRE(sublattice_mixed_volume({Px, Px2}, 3) == Int(0));

    // a diagonal segment has lattice length two in its own lattice
    Polytope D = hull_of({{0, 0}, {2, 2}}, 2);
    REQUIRE(sublattice_mixed_volume({D}, 2) == Int(2));

    // a planar body where a curve was expected
    Polytope T = hull_of({{0, 0}, {1, 0}, {0, 1}}, 2);
    REQUIRE_THROWS_AS(sublattice_mixed_volume({T}, 2), NotCoplanar);

    // flat triangle measured inside its own plane
    Polytope E = hull_of({{0, 0, 0}, {2, 0, 0}, {0, 1, 0}}, 3);
    REQUIRE(sublattice_mixed_volume({E, E}, 3) == Int(2));
}

TEST_CASE("polygon construction and arithmetic") {
    Polygon2 tri = Polygon2::from_points({qpt({0, 0}), qpt({1, 0}), qpt({0, 1})});
    REQUIRE(tri.verts.size() == 3);
    REQUIRE(tri.lattice_area() == Rat(1));

    Polygon2 seg = Polygon2::from_points({qpt({0, 0}), qpt({1, 1}), qpt({2, 2})});
    REQUIRE(seg.verts.size() == 2);
    REQUIRE(seg.lattice_area() == Rat(0));
    REQUIRE(seg.edges().size() == 2);

    Polygon2 pointp = Polygon2::from_points({qpt({5, 7}), qpt({5, 7})});
    REQUIRE(pointp.is_point());

    Polygon2 sq = Polygon2::from_points({qpt({0, 0}), qpt({1, 0}), qpt({0, 1}), qpt({1, 1})});
    Polygon2 dbl = minkowski_sum(sq, sq);
    REQUIRE(dbl.lattice_area() == Rat(8));
    REQUIRE(dbl.verts.size() == 4);

    Polygon2 back = minkowski_difference(dbl, sq);
    REQUIRE(back.verts == sq.verts);

    REQUIRE_THROWS_AS(minkowski_difference(tri, sq), NotASummand);

    Polygon2 half = scale(sq, Rat(1, 2));
    REQUIRE(half.lattice_area() == Rat(1, 2));

    Polygon2 shifted = Polygon2::from_points({qpt({3, 4}), qpt({4, 4}), qpt({3, 5}), qpt({4, 5})});
    REQUIRE(shifted.normalized().verts == sq.verts);
}

TEST_CASE("polygon sums with degenerate operands") {
    Polygon2 seg1 = Polygon2::from_points({qpt({0, 0}), qpt({2, 0})});
    Polygon2 seg2 = Polygon2::from_points({qpt({0, 0}), qpt({0, 3})});
    Polygon2 rect = minkowski_sum(seg1, seg2);
    REQUIRE(rect.verts.size() == 4);
    REQUIRE(rect.lattice_area() == Rat(12));

    Polygon2 para = minkowski_sum(seg1, seg1);
    REQUIRE(para.verts.size() == 2);
    REQUIRE(para.verts[1] == qpt({4, 0}));

    Polygon2 pt = Polygon2::from_points({qpt({1, 1})});
    Polygon2 moved = minkowski_sum(rect, pt);
    REQUIRE(moved.verts[0] == qpt({1, 1}));
}

TEST_CASE("fiber polygon of basic bodies") {
    // flat triangle: integrates to a half-length segment
    Polytope P = hull_of({{0, 0, 0}, {2, 0, 0}, {0, 1, 0}}, 3);
    Polygon2 f = fiber_polygon(P);
    REQUIRE(f.verts.size() == 2);
    REQUIRE(f.verts[0] == qpt({0, 0}));
    REQUIRE(f.verts[1] == VecQ{Rat(1), Rat(0)});

    // prism over a triangle: the base scaled by the width
    std::vector<std::vector<long long>> prism;
    for (long long x : {0, 3})
        for (auto yz : std::vector<std::vector<long long>>{{0, 0}, {1, 0}, {0, 1}})
            prism.push_back({x, yz[0], yz[1]});
    Polytope Pr = hull_of(prism, 3);
    Polygon2 fp = fiber_polygon(Pr);
    REQUIRE(sorted_poly(fp) == sorted_qverts({{0, 0}, {3, 0}, {0, 3}}));

    // a single point integrates to a point
    Polytope pt = hull_of({{5, 2, 1}}, 3);
    REQUIRE(fiber_polygon(pt).is_point());

    // base axis selection
    std::vector<std::vector<long long>> prism_y;
    for (long long y : {0, 2})
        for (auto xz : std::vector<std::vector<long long>>{{0, 0}, {1, 0}, {0, 1}})
            prism_y.push_back({xz[0], y, xz[1]});
    Polytope Pry = hull_of(prism_y, 3);
    Polygon2 fy = fiber_polygon(Pry, 1);
    REQUIRE(sorted_poly(fy) == sorted_qverts({{0, 0}, {2, 0}, {0, 2}}));
}

TEST_CASE("mixed fiber polygon of the plane-curve model pairs") {
    auto mfp_of = [](long long h1, long long h2) {
        Polytope P1 = hull_of({{0, 0, 0}, {h1, 0, 0}, {0, 1, 0}}, 3);
        Polytope P2 = hull_of({{0, 0, 0}, {h2, 0, 0}, {0, 0, 1}}, 3);
        return mixed_fiber_polygon(P1, P2);
    };
    REQUIRE(sorted_poly(mfp_of(2, 3)) == sorted_qverts({{0, 0}, {0, 2}, {3, 0}}));
    REQUIRE(sorted_poly(mfp_of(3, 4)) == sorted_qverts({{0, 0}, {0, 3}, {4, 0}}));
    REQUIRE(sorted_poly(mfp_of(4, 7)) == sorted_qverts({{0, 0}, {0, 4}, {7, 0}}));
}

TEST_CASE("mixed fiber polygon defining property on a sample pair") {
    Polytope P1 = hull_of({{0, 0, 0}, {2, 0, 0}, {0, 1, 0}}, 3);
    Polytope P2 = hull_of({{0, 0, 0}, {3, 0, 0}, {0, 0, 1}}, 3);
    Polygon2 mfp = mixed_fiber_polygon(P1, P2);
    Polytope M = polytope_of_polygon(mfp);
    for (std::vector<long long> dir :
         std::vector<std::vector<long long>>{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}}) {
        Polytope s2 = hull_of({{0, 0}, {dir[0], dir[1]}}, 2);
        Polytope s3 = hull_of({{0, 0, 0}, {0, dir[0], dir[1]}}, 3);
        INFO("direction " << dir[0] << "," << dir[1]);
        REQUIRE(mixed_volume({P1, P2, s3}) == mixed_volume({M, s2}));
    }
}
