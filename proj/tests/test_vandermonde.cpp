#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "tropsing/cyclotomic.hpp"
#include "tropsing/vandermonde.hpp"

using namespace tropsing;

namespace {

BSet bset(std::vector<long long> v) {
    std::vector<Int> w(v.begin(), v.end());
    return make_bset(w);
}

std::vector<Int> residues(std::vector<long long> v) { return std::vector<Int>(v.begin(), v.end()); }

// exact rank of a rational matrix by Gaussian elimination
int rat_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    size_t lead = 0;
    for (size_t r = 0; r < rows && lead < cols; ++lead) {
        size_t piv = r;
        while (piv < rows && m[piv][lead] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][lead] == 0) continue;
            Rat f = m[i][lead] / m[r][lead];
            for (size_t j = lead; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("combinatorial rank counts proportionality classes") {
    using M = std::vector<std::vector<Rat>>;
    CHECK(comb_rank(M{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}) == 1);
    CHECK(comb_rank(M{{Rat(1), Rat(2)}, {Rat(2), Rat(1)}}) == 2);
    CHECK(comb_rank(M{{Rat(1), Rat(2)}, {Rat(3), Rat(6)}}) == 1);  // rows proportional
    CHECK(comb_rank(M{{Rat(1), Rat(2), Rat(4)}, {Rat(3), Rat(6), Rat(12)}}) == 1);
    // 3 rows, 2 columns: the column count caps the answer
    CHECK(comb_rank(M{{Rat(1), Rat(1)}, {Rat(1), Rat(2)}, {Rat(1), Rat(3)}}) == 2);

    CHECK_THROWS_AS(comb_rank(M{}), SchemaError);
    CHECK_THROWS_AS(comb_rank(M{{Rat(1)}, {Rat(1), Rat(2)}}), SchemaError);
    CHECK_THROWS_AS(comb_rank(M{{Rat(1), Rat(0)}, {Rat(1), Rat(1)}}), ZeroEntry);
}

TEST_CASE("rational rank never exceeds the combinatorial rank") {
    std::mt19937_64 rng(20260822u);
    auto nonzero = [&]() {
        std::uniform_int_distribution<int> d(-5, 5);
        int x = 0;
        while (x == 0) x = d(rng);
        return Rat(x);
    };
    const int rows = 3, cols = 5;
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<std::vector<Rat>> m;
        if (trial % 3 == 0) {
            // patterned: rows drawn from t < 3 proportionality classes
            std::uniform_int_distribution<int> tcount(1, 2);
            int t = tcount(rng);
            std::vector<std::vector<Rat>> base;
            for (int i = 0; i < t; ++i) {
                std::vector<Rat> row;
                for (int j = 0; j < cols; ++j) row.push_back(nonzero());
                base.push_back(std::move(row));
            }
            std::uniform_int_distribution<int> which(0, t - 1);
            for (int i = 0; i < rows; ++i) {
                Rat s = nonzero();
                std::vector<Rat> row;
                for (const Rat& x : base[static_cast<size_t>(which(rng))])
                    row.push_back(s * x);
                m.push_back(std::move(row));
            }
            CHECK(comb_rank(m) <= t);
        } else {
            for (int i = 0; i < rows; ++i) {
                std::vector<Rat> row;
                for (int j = 0; j < cols; ++j) row.push_back(nonzero());
                m.push_back(std::move(row));
            }
        }
        CHECK(rat_rank(m) <= comb_rank(m));
    }
}

TEST_CASE("root tuples validate and reduce their residues") {
    RootTuple x(Int(4), residues({-1, 6}));
    CHECK(x.exponents == residues({3, 2}));
    CHECK_THROWS_AS(RootTuple(Int(0), residues({0})), SchemaError);
    CHECK_THROWS_AS(RootTuple(Int(4), residues({1, 5})), DuplicatePoint);
}

TEST_CASE("ratio and span orders") {
    CHECK(ratio_order(Int(12), Int(4)) == 3);
    CHECK(ratio_order(Int(12), Int(-4)) == 3);
    CHECK(ratio_order(Int(12), Int(0)) == 1);
    CHECK(ratio_order(Int(1), Int(0)) == 1);
    CHECK(root_span_order(Int(12), residues({0, 4, 6})) == 6);
    CHECK(root_span_order(Int(12), residues({5})) == 1);
    CHECK(root_span_order(Int(12), {residues({0, 4}), residues({6})}) == 3);
    CHECK(root_span_order(Int(12), {residues({0}), residues({4}), residues({6})}) == 1);
}

TEST_CASE("power matrices over the cyclotomic field") {
    // order 1: the only root is 1
    RootTuple trivial(Int(1), residues({0}));
    auto m1 = vdm_matrix(trivial, bset({0, 3, 7}));
    REQUIRE(m1.size() == 1);
    for (const auto& e : m1[0]) CHECK(e.is_one());

    // exponent 0 gives a column of ones
    RootTuple x(Int(5), residues({0, 1, 2, 3}));
    auto m = vdm_matrix(x, bset({0, 1, 2, 3}));
    for (const auto& row : m) CHECK(row[0].is_one());
    CHECK(m[1][1] == CyclotomicElement::zeta_power(5, Int(1)));
    CHECK(m[3][2] == CyclotomicElement::zeta_power(5, Int(6)));

    // distinct roots, consecutive exponents: classical full rank
    CHECK(comb_rank(m) == 4);
    CHECK(cyclotomic_rank(m) == 4);
}

TEST_CASE("roots in one coset of a common subgroup collapse the rows") {
    // all roots lie in zeta_12 * mu_3 and every exponent gap is divisible by 3
    RootTuple x(Int(12), residues({1, 5, 9}));
    BSet b = bset({0, 3, 6});
    CHECK(span_gcd(b) == 3);
    auto m = vdm_matrix(x, b);
    CHECK(comb_rank(m) == 1);
    CHECK(cyclotomic_rank(m) == 1);

    DegeneracyWitness w = classify_degeneracy(Int(12), x.exponents, b);
    CHECK(w.classification == "proportional_rows");
    REQUIRE(w.classes.size() == 1);
    CHECK(w.classes[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("duplicate nodes classify as proportional rows") {
    DegeneracyWitness w = classify_degeneracy(Int(5), residues({1, 1, 2}), bset({0, 1, 2}));
    CHECK(w.classification == "proportional_rows");
    REQUIRE(w.classes.size() == 2);
    CHECK(w.classes[0] == std::vector<int>{0, 1});
    CHECK(w.classes[1] == std::vector<int>{2});
}

TEST_CASE("equal power columns classify as proportional columns") {
    // cube roots of unity against exponents {0, 1, 3}: columns 0 and 2 agree
    DegeneracyWitness w = classify_degeneracy(Int(3), residues({0, 1, 2}), bset({0, 1, 3}));
    CHECK(w.classification == "proportional_columns");
    REQUIRE(w.classes.size() == 2);
    CHECK(w.classes[0] == std::vector<int>{0, 2});
    CHECK(w.classes[1] == std::vector<int>{1});
}

TEST_CASE("determinant vanishing agrees with the cyclotomic rank") {
    // degenerate: squares of the fourth roots 1, i, -1 repeat
    CHECK(vdmdetail::power_minor_vanishes(Int(4), residues({0, 1, 2}), {Int(0), Int(2), Int(4)}));
    // nondegenerate: classical Vandermonde at three distinct fifth roots
    CHECK(!vdmdetail::power_minor_vanishes(Int(5), residues({0, 1, 2}), {Int(0), Int(1), Int(2)}));
    // cross-check both against Gaussian elimination over the field
    CHECK(cyclotomic_rank(vdm_matrix(RootTuple(Int(4), residues({0, 1, 2})), bset({0, 2, 4}))) == 2);
    CHECK(cyclotomic_rank(vdm_matrix(RootTuple(Int(5), residues({0, 1, 2})), bset({0, 1, 2}))) == 3);
}

TEST_CASE("small sweep: degenerate 3x3 power matrices always show proportional lines") {
    SweepReport r = check_3x3_lemma(6, 6);
    CHECK(r.checked == 35 * 35);  // 35 residue triples for orders up to 6, 35 exponent triples
    CHECK(r.degenerate > 0);
    CHECK(r.confirmed == r.degenerate);
    CHECK(r.counterexamples.empty());
}

TEST_CASE("full sweep to order 12 and exponent 10 finds no counterexample") {
    SweepReport r = check_3x3_lemma(12, 10);
    CHECK(r.checked == 715LL * 165LL);
    CHECK(r.degenerate > 0);
    CHECK(r.confirmed == r.degenerate);
    CHECK(r.counterexamples.empty());
}

TEST_CASE("rank-2 power matrices split their roots or their exponents") {
    // row split: for roots 1, i, -1 and exponents {0, 2, 4}, the parts
    // {1, -1} and {i} have span order 2, which divides every exponent gap,
    // so each part collapses to proportional rows
    {
        Int n(4);
        auto es = residues({0, 1, 2});
        BSet b = bset({0, 2, 4});
        CHECK(vdmdetail::power_rows_dependent(n, es, b));
        CHECK(!vdmdetail::power_rank_at_most_one(n, es, b));
        CHECK(root_span_order(n, {residues({0, 2}), residues({1})}) == 2);
        CHECK(span_gcd(b) == 2);
    }
    // column split: for the cube roots and exponents {0, 1, 3}, the parts
    // {0, 3} and {1} have span gcd 3, a multiple of every root-ratio order,
    // so each part collapses to proportional columns
    {
        Int n(3);
        auto es = residues({0, 1, 2});
        BSet b = bset({0, 1, 3});
        CHECK(vdmdetail::power_rows_dependent(n, es, b));
        CHECK(!vdmdetail::power_rank_at_most_one(n, es, b));
        CHECK(tuple_span_gcd({bset({0, 3}), bset({1})}) == 3);
        CHECK(root_span_order(n, es) == 3);
    }
    SweepReport r = check_rank2_splitting(8, 5, 8);
    CHECK(r.checked == 126LL * 372LL);
    CHECK(r.degenerate > 0);
    CHECK(r.confirmed == r.degenerate);
    CHECK(r.counterexamples.empty());
}

TEST_CASE("splitting search: two rows can never degenerate over a coprime set") {
    SweepReport r = conjecture_search(1, 8, 6);
    CHECK(r.checked > 0);
    CHECK(r.degenerate == 0);
    CHECK(r.counterexamples.empty());
}

TEST_CASE("splitting search: three rows always split when degenerate") {
    SweepReport r = conjecture_search(2, 10, 8);
    CHECK(r.checked > 0);
    CHECK(r.degenerate > 0);
    CHECK(r.confirmed == r.degenerate);
    CHECK(r.counterexamples.empty());
}

TEST_CASE("symbolic power determinants and their exact quotients") {
    // base case: the alternating determinant divided by itself
    SchurDetResult base = schur_det(0, 1, 2);
    CHECK(base.quotient == MPoly::constant(3, Rat(1)));
    CHECK(base.leading == std::vector<int>{0, 0, 0});
    REQUIRE(base.has_reduced);
    CHECK(base.reduced_quotient == base.quotient);

    // complete homogeneous of degree one
    SchurDetResult h1 = schur_det(0, 1, 3);
    MPoly x = MPoly::variable(3, 0), y = MPoly::variable(3, 1), z = MPoly::variable(3, 2);
    CHECK(h1.quotient == x + y + z);
    CHECK(h1.leading == std::vector<int>{1, 0, 0});
    REQUIRE(h1.has_reduced);  // gcd(1, 3) = 1 reduces nothing
    CHECK(h1.reduced_quotient == h1.quotient);

    // doubled exponents factor through the substitution t -> t^2
    SchurDetResult dbl = schur_det(0, 2, 4);
    CHECK(dbl.quotient == (x + y) * (y + z) * (z + x));
    CHECK(dbl.leading == std::vector<int>{2, 1, 0});
    REQUIRE(dbl.has_reduced);
    CHECK(dbl.reduced_quotient == MPoly::constant(3, Rat(1)));
    CHECK(dbl.reduced_leading == std::vector<int>{0, 0, 0});

    // a positive lowest exponent blocks the reduced form
    SchurDetResult shifted = schur_det(1, 2, 3);
    CHECK(!shifted.has_reduced);
    CHECK(shifted.leading == std::vector<int>{1, 1, 1});

    CHECK_THROWS_AS(schur_det(2, 1, 3), SchemaError);
    CHECK_THROWS_AS(schur_det(0, 0, 1), SchemaError);
}

TEST_CASE("quotient leading monomials over an exponent grid") {
    for (int a = 0; a <= 5; ++a)
        for (int b = a + 1; b <= 7; ++b)
            for (int c = b + 1; c <= 9; ++c) {
                SchurDetResult r = schur_det(a, b, c);
                CHECK(r.leading == std::vector<int>{c - 2, b - 1, a});
                CHECK(r.quotient * power_det3(0, 1, 2) == r.det);
                if (a == 0) {
                    long long n = to_int64(gcd(Int(b), Int(c)));
                    REQUIRE(r.has_reduced);
                    CHECK(r.reduced_leading ==
                          std::vector<int>{c - 2 * static_cast<int>(n),
                                           b - static_cast<int>(n), 0});
                    CHECK(r.reduced_quotient *
                              power_det3(0, static_cast<int>(n), 2 * static_cast<int>(n)) ==
                          r.det);
                }
            }
}
