#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "tropsing/delta.hpp"

using namespace tropsing;

namespace {

BSet bset(std::vector<long long> vs) {
    std::vector<Int> out;
    for (long long v : vs) out.push_back(Int(v));
    return make_bset(out);
}

std::vector<Int> jseq(std::vector<long long> vs) {
    std::vector<Int> out;
    for (long long v : vs) out.push_back(Int(v));
    return out;
}

CoeffMap cmap(std::vector<std::pair<long long, Rat>> entries) {
    CoeffMap m;
    for (auto& [b, c] : entries) m[Int(b)] = c;
    return m;
}

} // namespace

TEST_CASE("closed formula on pinned supports") {
    DeltaResult r = delta_sparse(bset({2}), bset({3}));
    REQUIRE(r.delta == 1);
    REQUIRE(r.milnor == 2);
    REQUIRE(r.j_seq == jseq({1}));

    r = delta_sparse(bset({4}), bset({6, 7}));
    REQUIRE(r.delta == 8);
    REQUIRE(r.j_seq == jseq({2, 1}));

    r = delta_sparse(bset({2}), bset({4, 7}));
    REQUIRE(r.delta == 3);
    REQUIRE(r.j_seq == jseq({2, 2, 2, 1}));

    r = delta_sparse(bset({4, 5}), bset({6, 7}));
    REQUIRE(r.delta == 8);

    r = delta_sparse(bset({1}), bset({7}));
    REQUIRE(r.delta == 0);
}

TEST_CASE("common exponent factors are divided out") {
    DeltaResult r = delta_sparse(bset({6}), bset({4}));
    REQUIRE(r.scale == 2);
    REQUIRE(r.delta == 1);
    REQUIRE_THROWS_AS(delta_sparse(bset({6}), bset({4}), false), NotInjective);
}

TEST_CASE("support validation") {
    REQUIRE_THROWS_AS(delta_sparse(bset({0}), bset({3})), InvalidSupport);
    REQUIRE_NOTHROW(delta_sparse(bset({0, 2}), bset({3})));
    REQUIRE(delta_sparse(bset({0, 2}), bset({3})).delta == 1);
}

TEST_CASE("delta vanishes exactly for smooth germs") {
    for (long long a = 1; a <= 9; ++a)
        for (long long b = 1; b <= 9; ++b) {
            DeltaResult r = delta_sparse(bset({a}), bset({b}));
            Int g = gcd(Int(a), Int(b));
            bool smooth = (a / g == 1) || (b / g == 1);
            INFO("a=" << a << " b=" << b);
            REQUIRE((r.delta == 0) == smooth);
        }
}

TEST_CASE("coefficient genericity test") {
    // generic coefficients on ({4},{6,7})
    NondegReport rep = is_zero_nondegenerate(cmap({{4, Rat(1)}}),
                                             cmap({{6, Rat(1)}, {7, Rat(1)}}));
    REQUIRE(rep.nondegenerate);

    // tuned coefficients tie the normalized first off-grid steps at k = 2
    rep = is_zero_nondegenerate(cmap({{4, Rat(1)}, {5, Rat(3)}}),
                                cmap({{6, Rat(1)}, {7, Rat(9, 2)}}));
    REQUIRE_FALSE(rep.nondegenerate);
    REQUIRE(rep.witness == 2);

    // coprime minimal exponents have nothing to check
    rep = is_zero_nondegenerate(cmap({{2, Rat(5)}}), cmap({{3, Rat(-7)}}));
    REQUIRE(rep.nondegenerate);

    // dead terms and constant shifts are ignored
    rep = is_zero_nondegenerate(cmap({{0, Rat(9)}, {4, Rat(1)}, {5, Rat(0)}}),
                                cmap({{6, Rat(1)}, {7, Rat(1)}}));
    REQUIRE(rep.nondegenerate);

    REQUIRE_THROWS_AS(is_zero_nondegenerate(cmap({{0, Rat(1)}}), cmap({{3, Rat(1)}})),
                      InvalidSupport);
}

TEST_CASE("oracle agrees with the formula on generic instances") {
    REQUIRE(delta_oracle(cmap({{2, Rat(1)}}), cmap({{3, Rat(1)}})) == 1);
    REQUIRE(delta_oracle(cmap({{4, Rat(1)}}), cmap({{6, Rat(1)}, {7, Rat(1)}})) == 8);
    REQUIRE(delta_oracle(cmap({{2, Rat(1)}}), cmap({{4, Rat(1)}, {7, Rat(2)}})) == 3);
    REQUIRE(delta_oracle(cmap({{1, Rat(1)}}), cmap({{7, Rat(1)}})) == 0);
}

TEST_CASE("oracle exceeds the formula on a tuned degenerate instance") {
    CoeffMap f1 = cmap({{4, Rat(1)}, {5, Rat(3)}});
    CoeffMap f2 = cmap({{6, Rat(1)}, {7, Rat(9, 2)}});
    REQUIRE_FALSE(is_zero_nondegenerate(f1, f2).nondegenerate);
    Int formula = delta_sparse(bset({4, 5}), bset({6, 7})).delta;
    REQUIRE(formula == 8);
    REQUIRE(delta_oracle(f1, f2) > formula);
}

TEST_CASE("non-injective parametrizations are rejected by the oracle") {
    REQUIRE_THROWS_AS(delta_oracle(cmap({{2, Rat(1)}}), cmap({{4, Rat(1)}})), NotInjective);
}

TEST_CASE("randomized oracle cross-check") {
    std::mt19937_64 rng(20240817u);
    auto rand_int = [&](long long lo, long long hi) {
        return static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1)) + lo;
    };
    int done = 0;
    int attempts = 0;
    while (done < 12 && attempts < 4000) {
        ++attempts;
        CoeffMap f[2];
        BSet b[2];
        Int g = 0;
        for (int i = 0; i < 2; ++i) {
            int sz = static_cast<int>(rand_int(1, 3));
            std::set<long long> supp;
            while (static_cast<int>(supp.size()) < sz) supp.insert(rand_int(1, 12));
            for (long long s : supp) {
                long long c = 0;
                while (c == 0) c = rand_int(-50, 50);
                f[i][Int(s)] = Rat(c);
                b[i].push_back(Int(s));
                g = gcd(g, Int(s));
            }
        }
        if (g != 1) continue;
        if (!is_zero_nondegenerate(f[0], f[1]).nondegenerate) continue;
        Int formula = delta_sparse(b[0], b[1]).delta;
        Int oracle = delta_oracle(f[0], f[1]);
        INFO("supports " << to_string(b[0]) << " / " << to_string(b[1]));
        REQUIRE(oracle == formula);
        ++done;
    }
    REQUIRE(done == 12);
}
