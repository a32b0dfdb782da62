#include <catch2/catch_amalgamated.hpp>

#include "tropsing/poly.hpp"

using namespace tropsing;

namespace {

MPoly X(int n = 2) { return MPoly::variable(n, 0); }
MPoly Y(int n = 2) { return MPoly::variable(n, 1); }
MPoly C(const Rat& c, int n = 2) { return MPoly::constant(n, c); }

} // namespace

TEST_CASE("ring arithmetic") {
    MPoly x = X(), y = Y();
    MPoly sq = (x + y) * (x + y);
    MPoly expect(2);
    expect.add_term({2, 0}, Rat(1));
    expect.add_term({1, 1}, Rat(2));
    expect.add_term({0, 2}, Rat(1));
    REQUIRE(sq == expect);
    REQUIRE((sq - expect).is_zero());
    REQUIRE(sq.degree(0) == 2);
    REQUIRE(sq.total_degree() == 2);
    REQUIRE(sq.subst_zero(1) == x * x);
    REQUIRE(sq.eval({Rat(2), Rat(3)}) == Rat(25));
}

TEST_CASE("exact division") {
    MPoly x = X(), y = Y();
    MPoly q = mpoly_divide_exact(x * x - y * y, x - y);
    REQUIRE(q == x + y);
    REQUIRE_THROWS_AS(mpoly_divide_exact(x * x - y * y + C(Rat(1)), x - y), DivisionFailure);
    REQUIRE_THROWS_AS(mpoly_divide_exact(x, MPoly(2)), DivisionFailure);
    REQUIRE(mpoly_divide_exact(MPoly(2), x).is_zero());
}

TEST_CASE("divided differences") {
    // t^2 -> t1 + t2
    REQUIRE(divided_difference({{Int(2), Rat(1)}}) == X() + Y());
    // t^3 -> t1^2 + t1 t2 + t2^2
    MPoly d3 = divided_difference({{Int(3), Rat(1)}});
    REQUIRE(d3 == X() * X() + X() * Y() + Y() * Y());
    // constants vanish, linear terms become constants
    REQUIRE(divided_difference({{Int(0), Rat(7)}}).is_zero());
    REQUIRE(divided_difference({{Int(1), Rat(5)}}) == C(Rat(5)));

    // defining identity: dd(f) * (t1 - t2) == f(t1) - f(t2)
    std::map<Int, Rat> coeffs = {{Int(1), Rat(2)}, {Int(4), Rat(3)}, {Int(6), Rat(-1, 2)}};
    MPoly dd = divided_difference(coeffs);
    MPoly lhs = dd * (X() - Y());
    MPoly rhs(2);
    for (const auto& [b, c] : coeffs) {
        int bb = static_cast<int>(to_int64(b));
        rhs.add_term({bb, 0}, c);
        rhs.add_term({0, bb}, -c);
    }
    REQUIRE(lhs == rhs);
}

TEST_CASE("bivariate gcd") {
    MPoly x = X(), y = Y();
    MPoly g = bivariate_gcd(x * x - y * y, x - y);
    REQUIRE(g.total_degree() == 1);
    REQUIRE(mpoly_divide_exact(x * x - y * y, g) * g == x * x - y * y);

    MPoly c = bivariate_gcd(x, y);
    REQUIRE(c.total_degree() == 0);
    REQUIRE_FALSE(c.is_zero());

    // content interplay: gcd of t1*(t1+t2) and t1*(t1-t2) is t1 up to scalar
    MPoly a = x * (x + y);
    MPoly b = x * (x - y);
    MPoly h = bivariate_gcd(a, b);
    REQUIRE(h.total_degree() == 1);
    REQUIRE(h.subst_zero(1).ord(0) == 1);

    REQUIRE(bivariate_gcd(MPoly(2), x) == x);
}

TEST_CASE("intersection numbers at the origin") {
    MPoly x = X(), y = Y();
    REQUIRE(fulton_intersection_number(x, y) == mult_of(1));
    REQUIRE(fulton_intersection_number(x + y, x * x + x * y + y * y) == mult_of(2));
    REQUIRE(fulton_intersection_number(x * x, y * y * y) == mult_of(6));
    REQUIRE(fulton_intersection_number(y - x * x, y) == mult_of(2));
    REQUIRE(fulton_intersection_number(x, x).infinite);
    REQUIRE(fulton_intersection_number(x - y, x * x - y * y).infinite);
    REQUIRE(fulton_intersection_number(MPoly(2), x).infinite);
    REQUIRE(fulton_intersection_number(C(Rat(1)) + x, y * y) == mult_of(0));
    // nonvanishing at the origin on either side
    REQUIRE(fulton_intersection_number(C(Rat(3)), y) == mult_of(0));

    // additivity on products
    MPoly F = y - x * x;
    auto a = fulton_intersection_number(F, x);
    auto b = fulton_intersection_number(F, x - y);
    auto ab = fulton_intersection_number(F, x * (x - y));
    REQUIRE(a == mult_of(1));
    REQUIRE(b == mult_of(1));
    REQUIRE(ab == mult_of(2));

    // invariance under adding a multiple of the other curve
    MPoly G = x * x + y;
    auto before = fulton_intersection_number(F, G);
    auto after = fulton_intersection_number(F, G + (x + y) * F);
    REQUIRE(before == after);

    // symmetry
    REQUIRE(fulton_intersection_number(G, F) == before);
}

TEST_CASE("resultants") {
    // res_t(t - a, t - b) = a - b, with the first polynomial's rows on top
    MPoly t = MPoly::variable(3, 0), a = MPoly::variable(3, 1), b = MPoly::variable(3, 2);
    REQUIRE(sylvester_resultant(t - a, t - b, 0) == a - b);

    // res_t(t^2 - x, t - y) = y^2 - x
    MPoly t2 = MPoly::variable(3, 0);
    MPoly xx = MPoly::variable(3, 1);
    MPoly yy = MPoly::variable(3, 2);
    REQUIRE(sylvester_resultant(t2 * t2 - xx, t2 - yy, 0) == yy * yy - xx);

    // numeric: res(t^2 + 1, t^2 - 1) = 4
    MPoly u = MPoly::variable(1, 0);
    MPoly one = MPoly::constant(1, Rat(1));
    REQUIRE(sylvester_resultant(u * u + one, u * u - one, 0) == MPoly::constant(1, Rat(4)));

    // shared root: vanishes
    REQUIRE(sylvester_resultant(u * u - one, u - one, 0).is_zero());

    // degree-zero operand: power rule
    REQUIRE(sylvester_resultant(MPoly::constant(1, Rat(2)), u - one, 0) ==
            MPoly::constant(1, Rat(2)));
    REQUIRE(sylvester_resultant(u - one, MPoly::constant(1, Rat(3)), 0) ==
            MPoly::constant(1, Rat(3)));
    REQUIRE_THROWS_AS(sylvester_resultant(MPoly(1), u, 0), SchemaError);
}
