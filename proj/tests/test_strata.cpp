#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "tropsing/strata.hpp"

using namespace tropsing;

namespace {

BSet bset(const std::vector<long long>& v) {
    std::vector<Int> vals;
    for (long long x : v) vals.push_back(Int(x));
    return make_bset(std::move(vals));
}

const StratumEntry* find_stratum(const StrataReport& r, const std::string& name) {
    for (const StratumEntry& e : r.entries)
        if (e.name == name) return &e;
    return nullptr;
}

const CensusEntry* find_census(const SingularityCensus& c, int source,
                               const SingularityKind& kind) {
    for (const CensusEntry& e : c.entries)
        if (e.source == source && e.kind == kind) return &e;
    return nullptr;
}

// Every stratum degree must equal the count of the matching singularity of
// the triangle-prism shadow, and the residual family degree must equal its
// node count.
void check_census_duality(const std::vector<long long>& b1v, const std::vector<long long>& b2v) {
    BSet b1 = bset(b1v), b2 = bset(b2v);
    StrataReport rep = strata_report(b1, b2);
    SingularityCensus cen = strata_cross_check(b1, b2);

    bool family_seen = false;
    size_t matched = 0;
    for (const StratumEntry& e : rep.entries) {
        if (!e.has_degree) continue;
        INFO("stratum " << e.name);
        if (e.name == "S1") {
            family_seen = true;
            CHECK(e.degree == cen.nodes);
            continue;
        }
        int source = 0;
        if (e.name == "S_0") source = 3;
        else if (e.name == "S_inf") source = 4;
        else if (e.name == "T_0") source = 5;
        else if (e.name == "T_1" || e.name == "T_2") source = 2;
        else if (e.name.rfind("S_", 0) == 0) source = 1;
        REQUIRE(source != 0);
        const CensusEntry* c = find_census(cen, source, e.type);
        REQUIRE(c != nullptr);
        CHECK(c->count == e.degree);
        ++matched;
    }
    // nothing in the shadow goes unexplained
    CHECK(matched == cen.entries.size());
    if (!family_seen) CHECK(cen.nodes == 0);
}

}  // namespace

TEST_CASE("support normalization shifts and rescales") {
    NormalizedSupports n = normalize_supports(bset({3, 5}), bset({2, 6}));
    CHECK(n.b1 == bset({0, 1}));
    CHECK(n.b2 == bset({0, 2}));
    CHECK(n.record.shift1 == 3);
    CHECK(n.record.shift2 == 2);
    CHECK(n.record.scale == 2);

    NormalizedSupports id = normalize_supports(bset({0, 2, 3}), bset({0, 1}));
    CHECK(id.b1 == bset({0, 2, 3}));
    CHECK(id.b2 == bset({0, 1}));
    CHECK(id.record.trivial());
}

TEST_CASE("residue decompositions are found and unique") {
    auto decs = find_m_decompositions(bset({0, 1, 2}), bset({0, 4}));
    REQUIRE(decs.size() == 1);
    CHECK(decs[0].which == 1);
    CHECK(decs[0].m == 2);
    CHECK(decs[0].part1 == bset({0, 2}));
    CHECK(decs[0].part2 == bset({1}));

    CHECK(find_m_decompositions(bset({0, 2, 3}), bset({0, 1})).empty());
    CHECK(find_m_decompositions(bset({0, 1, 2}), bset({0, 1, 2})).empty());

    auto wide = find_m_decompositions(bset({0, 1, 2, 4}), bset({0, 2, 6}));
    REQUIRE(wide.size() == 1);
    CHECK(wide[0].which == 1);
    CHECK(wide[0].m == 2);
    CHECK(wide[0].part1 == bset({0, 2, 4}));
    CHECK(wide[0].part2 == bset({1}));
}

TEST_CASE("split and folding strata of a mixed pair") {
    StrataReport rep = strata_report(bset({0, 1, 2}), bset({0, 4}));
    REQUIRE(rep.entries.size() == 4);

    const StratumEntry* split = find_stratum(rep, "S_2");
    REQUIRE(split != nullptr);
    CHECK(split->degree == 3);
    CHECK(split->type.ordinary);
    CHECK(split->type.m == 2);
    CHECK(split->type.delta == 1);

    const StratumEntry* fold = find_stratum(rep, "T_2");
    REQUIRE(fold != nullptr);
    CHECK(fold->degree == 1);
    CHECK(fold->type.m == 2);

    const StratumEntry* fam = find_stratum(rep, "S1");
    REQUIRE(fam != nullptr);
    CHECK(fam->degree == 6);
    CHECK(fam->degree_source == "census");
    CHECK(fam->components == 1);

    const StratumEntry* member = find_stratum(rep, "S_2^1");
    REQUIRE(member != nullptr);
    CHECK_FALSE(member->has_degree);
    CHECK(member->type.m == 2);

    // the excluded unit: order 4/2 = 2 divides j = 2, so S_2^2 must be absent
    CHECK(find_stratum(rep, "S_2^2") == nullptr);
    CHECK(find_stratum(rep, "S_0") == nullptr);
    CHECK(find_stratum(rep, "S_inf") == nullptr);
}

TEST_CASE("two-element set with unit-span partner folds alone") {
    StrataReport rep = strata_report(bset({0, 2, 3}), bset({0, 1}));
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].name == "T_2");
    CHECK(rep.entries[0].degree == 1);
    CHECK(rep.entries[0].type.ordinary);
    CHECK(rep.entries[0].type.m == 3);
    CHECK(rep.entries[0].type.delta == 3);
}

TEST_CASE("twin three-element sets leave only the twin stratum") {
    StrataReport rep = strata_report(bset({0, 1, 2}), bset({0, 1, 2}));
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].name == "T_0");
    CHECK(rep.entries[0].degree == 3);
    CHECK(rep.entries[0].type.ordinary);
    CHECK(rep.entries[0].type.m == 2);
    CHECK(rep.entries[0].type.delta == 1);
}

TEST_CASE("twin stratum can coexist with the low-order stratum") {
    StrataReport rep = strata_report(bset({0, 2, 3}), bset({0, 2, 3}));
    REQUIRE(rep.entries.size() == 2);

    const StratumEntry* low = find_stratum(rep, "S_0");
    REQUIRE(low != nullptr);
    CHECK(low->degree == 1);
    CHECK_FALSE(low->type.ordinary);
    CHECK(low->type.b1 == bset({2, 3}));
    CHECK(low->type.delta == 1);

    const StratumEntry* twin = find_stratum(rep, "T_0");
    REQUIRE(twin != nullptr);
    CHECK(twin->degree == 3);
    CHECK(twin->type.m == 3);

    CHECK(find_stratum(rep, "S1") == nullptr);
}

TEST_CASE("generic wide pair carries the closed-form family degree") {
    StrataReport rep = strata_report(bset({0, 1, 2, 4}), bset({0, 2, 6}));

    const StratumEntry* split = find_stratum(rep, "S_2");
    REQUIRE(split != nullptr);
    CHECK(split->degree == 5);

    CHECK(find_stratum(rep, "S_0") == nullptr);
    const StratumEntry* high = find_stratum(rep, "S_inf");
    REQUIRE(high != nullptr);
    CHECK(high->degree == 1);
    CHECK_FALSE(high->type.ordinary);
    CHECK(high->type.b1 == bset({2, 3, 4}));
    CHECK(high->type.b2 == bset({4, 6}));
    CHECK(high->type.delta == 2);

    const StratumEntry* fam = find_stratum(rep, "S1");
    REQUIRE(fam != nullptr);
    CHECK(fam->degree == 29);
    CHECK(fam->degree_source == "closed_form");
    CHECK(fam->components == 1);

    // the only family member is the free-collision stratum: k_2 = 2 and the
    // modulus-2 split excludes its lone unit
    const StratumEntry* s = find_stratum(rep, "S");
    REQUIRE(s != nullptr);
    CHECK_FALSE(s->has_degree);
    CHECK(find_stratum(rep, "S_2^1") == nullptr);
    CHECK(find_stratum(rep, "S_1^1") == nullptr);
}

TEST_CASE("normalization can reduce a pair to a single folding stratum") {
    StrataReport rep = strata_report(bset({3, 5}), bset({2, 6}));
    CHECK(rep.supports.b1 == bset({0, 1}));
    CHECK(rep.supports.b2 == bset({0, 2}));
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].name == "T_1");
    CHECK(rep.entries[0].type.m == 2);
}

TEST_CASE("swapping the exponent sets permutes the report") {
    StrataReport a = strata_report(bset({0, 1, 2}), bset({0, 4}));
    StrataReport b = strata_report(bset({0, 4}), bset({0, 1, 2}));

    CHECK(find_stratum(b, "T_1") != nullptr);
    CHECK(find_stratum(b, "T_2") == nullptr);
    CHECK(find_stratum(b, "S_1^1") != nullptr);
    CHECK(find_stratum(b, "S_2^1") == nullptr);

    auto signature = [](const StrataReport& r) {
        std::vector<std::pair<Int, Int>> sig;  // (degree or -1, delta)
        for (const StratumEntry& e : r.entries)
            sig.emplace_back(e.has_degree ? e.degree : Int(-1), e.type.delta);
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    CHECK(signature(a) == signature(b));
}

TEST_CASE("negating the exponents swaps the low- and high-order strata") {
    StrataReport fwd = strata_report(bset({0, 1, 2, 4}), bset({0, 2, 6}));
    StrataReport bwd = strata_report(bset({-4, -2, -1, 0}), bset({-6, -2, 0}));

    const StratumEntry* low = find_stratum(bwd, "S_0");
    REQUIRE(low != nullptr);
    const StratumEntry* high = find_stratum(fwd, "S_inf");
    REQUIRE(high != nullptr);
    CHECK(low->type.b1 == high->type.b1);
    CHECK(low->type.b2 == high->type.b2);
    CHECK(low->type.delta == high->type.delta);
    CHECK(find_stratum(bwd, "S_inf") == nullptr);

    const StratumEntry* fam_f = find_stratum(fwd, "S1");
    const StratumEntry* fam_b = find_stratum(bwd, "S1");
    REQUIRE(fam_f != nullptr);
    REQUIRE(fam_b != nullptr);
    CHECK(fam_f->degree == fam_b->degree);

    const StratumEntry* split_b = find_stratum(bwd, "S_2");
    REQUIRE(split_b != nullptr);
    CHECK(split_b->degree == 5);
}

TEST_CASE("stratum degrees equal the shadow singularity counts") {
    check_census_duality({0, 1, 2}, {0, 4});
    check_census_duality({0, 2, 3}, {0, 1});
    check_census_duality({0, 1, 2}, {0, 1, 2});
    check_census_duality({0, 1, 2, 4}, {0, 2, 6});
    check_census_duality({0, 2, 3}, {0, 2, 3});
    check_census_duality({0, 3}, {0, 4});
    check_census_duality({0, 2}, {0, 3});
}

TEST_CASE("exceptional pairs are rejected by name") {
    CHECK_THROWS_AS(strata_report(bset({0, 1}), bset({0, 1})), ExceptionalCase);
    CHECK_THROWS_AS(strata_report(bset({0}), bset({0, 1, 2})), ExceptionalCase);
    // a scaled copy of the linear pair is exceptional after normalization
    CHECK_THROWS_AS(strata_report(bset({0, 2}), bset({0, 2})), ExceptionalCase);
}
