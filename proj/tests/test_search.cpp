#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "fintop/axioms.hpp"
#include "fintop/gallery.hpp"
#include "fintop/search.hpp"
#include "naive_axioms.hpp"

using namespace fintop;

namespace {

std::vector<std::string> collect_closures(int n) {
    std::vector<std::string> out;
    enumerate_closures(n, [&](const OperatorTable& op) { out.push_back(serialize(op)); });
    return out;
}

std::vector<std::string> collect_boundaries(int n) {
    std::vector<std::string> out;
    enumerate_boundaries(n, [&](const OperatorTable& op) { out.push_back(serialize(op)); });
    return out;
}

// Every one of the (2^n)^(2^n) tables, filtered through the naive oracle,
// in lexicographic table order. Only feasible at n <= 2.
std::vector<std::string> brute_force(int n, const std::vector<AxiomId>& must_hold) {
    const Universe u(n);
    const std::uint32_t count = u.subset_count();
    std::vector<std::uint32_t> t(count, 0);
    std::vector<std::string> out;
    while (true) {
        const OperatorTable op(u, t);
        bool ok = true;
        for (AxiomId a : must_hold) ok = ok && naive::holds(op, a);
        if (ok) out.push_back(serialize(op));
        std::size_t i = t.size();
        while (i > 0 && ++t[i - 1] == count) t[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

}  // namespace

TEST_CASE("enumerations match the brute-force oracle filter at n <= 2") {
    const std::vector<AxiomId> delta(delta_axioms.begin(), delta_axioms.end());
    const std::vector<AxiomId> beta(beta_axioms.begin(), beta_axioms.end());
    for (int n = 0; n <= 2; ++n) {
        CHECK(collect_closures(n) == brute_force(n, delta));
        CHECK(collect_boundaries(n) == brute_force(n, beta));
    }
}

TEST_CASE("the count triangle starts 1, 1, 4, 29") {
    const std::uint64_t expected[4] = {1, 1, 4, 29};
    for (int n = 0; n <= 3; ++n) {
        std::uint64_t closures = 0, boundaries = 0;
        const EnumStats cs = enumerate_closures(n, [&](const OperatorTable&) { ++closures; });
        const EnumStats bs = enumerate_boundaries(n, [&](const OperatorTable&) { ++boundaries; });
        CHECK(closures == expected[n]);
        CHECK(boundaries == expected[n]);
        CHECK(cs.matches == closures);
        CHECK(bs.matches == boundaries);
        CHECK(cs.exhausted);
        CHECK(bs.exhausted);
        CHECK(enumerate_topologies(n).size() == expected[n]);
    }
}

TEST_CASE("enumeration examines exactly the forced candidate space") {
    // boundaries: op({}) = {} and op(A) = op(X\A) leave one free value per
    // complement pair, 8^3 tables at n = 3; closures: one singleton image
    // s_i containing i per element, 4^3 tuples at n = 3.
    CHECK(enumerate_boundaries(3, [](const OperatorTable&) {}).candidates_examined == 512);
    CHECK(enumerate_closures(3, [](const OperatorTable&) {}).candidates_examined == 64);
    CHECK(enumerate_boundaries(2, [](const OperatorTable&) {}).candidates_examined == 4);
}

TEST_CASE("visitors receive operators in ascending table order") {
    std::vector<std::vector<std::uint32_t>> tables;
    enumerate_closures(2, [&](const OperatorTable& op) { tables.push_back(op.raw()); });
    REQUIRE(tables.size() == 4);
    CHECK(std::is_sorted(tables.begin(), tables.end()));
    CHECK(tables[0] == std::vector<std::uint32_t>{0, 1, 2, 3});
    CHECK(tables[1] == std::vector<std::uint32_t>{0, 1, 3, 3});
    CHECK(tables[2] == std::vector<std::uint32_t>{0, 3, 2, 3});
    CHECK(tables[3] == std::vector<std::uint32_t>{0, 3, 3, 3});

    tables.clear();
    enumerate_boundaries(3, [&](const OperatorTable& op) { tables.push_back(op.raw()); });
    CHECK(std::is_sorted(tables.begin(), tables.end()));
}

TEST_CASE("enumeration caps reject out-of-range universes") {
    CHECK_THROWS_AS(enumerate_closures(5, [](const OperatorTable&) {}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_boundaries(-1, [](const OperatorTable&) {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_topologies(5), std::invalid_argument);
    CHECK_THROWS_AS(verify_propositions(4), std::invalid_argument);
    SearchSpec big;
    big.n = 5;
    CHECK_THROWS_AS(find_witnesses(big), std::invalid_argument);
}

TEST_CASE("find_witnesses reproduces the boundary set when all axioms are required") {
    SearchSpec spec;
    spec.n = 2;
    spec.require.assign(beta_axioms.begin(), beta_axioms.end());
    const WitnessSearchResult r = find_witnesses(spec);
    REQUIRE(r.witnesses.size() == 4);
    CHECK(r.stats.exhausted);
    CHECK(r.stats.candidates_examined == 4);
    CHECK(r.stats.matches == 4);
    std::vector<std::string> got;
    for (const OperatorTable& w : r.witnesses) got.push_back(serialize(w));
    CHECK(got == collect_boundaries(2));
}

TEST_CASE("find_witnesses rejects contradictory requests") {
    SearchSpec bad;
    bad.n = 2;
    bad.require = {AxiomId::B1};
    bad.forbid = {AxiomId::B1};
    CHECK_THROWS_AS(find_witnesses(bad), std::invalid_argument);
}

TEST_CASE("result limits stop the search and mark it unexhausted") {
    SearchSpec spec;
    spec.n = 2;
    spec.limit = 1;
    const WitnessSearchResult r = find_witnesses(spec);
    REQUIRE(r.witnesses.size() == 1);
    CHECK_FALSE(r.stats.exhausted);
    CHECK(r.stats.candidates_examined == 1);
}

TEST_CASE("witnesses satisfy exactly what was asked") {
    SearchSpec spec;
    spec.n = 3;
    spec.require = {AxiomId::B1, AxiomId::B5};
    spec.forbid = {AxiomId::B2, AxiomId::B3};
    spec.limit = 25;
    const WitnessSearchResult r = find_witnesses(spec);
    REQUIRE_FALSE(r.witnesses.empty());
    for (const OperatorTable& w : r.witnesses) {
        CHECK(axiom_holds(w, AxiomId::B1));
        CHECK(axiom_holds(w, AxiomId::B5));
        CHECK_FALSE(axiom_holds(w, AxiomId::B2));
        CHECK_FALSE(axiom_holds(w, AxiomId::B3));
    }
    CHECK(r.witnesses.size() <= 25);
}

TEST_CASE("independence witnesses exist at the published sizes") {
    const IndependenceResult b1 = find_independence_witness(AxiomId::B1);
    REQUIRE(b1.witness.has_value());
    CHECK(b1.witness_n == 1);
    CHECK(b1.witness->raw() == std::vector<std::uint32_t>{1, 1});
    CHECK_FALSE(axiom_holds(*b1.witness, AxiomId::B1));
    for (AxiomId a : {AxiomId::B2, AxiomId::B3, AxiomId::B4, AxiomId::B5})
        CHECK(axiom_holds(*b1.witness, a));

    const IndependenceResult b5 = find_independence_witness(AxiomId::B5);
    REQUIRE(b5.witness.has_value());
    CHECK(b5.witness_n == 1);
    CHECK(operators_equal(*b5.witness, OperatorTable::identity(Universe(1))));

    CHECK_THROWS_AS(find_independence_witness(AxiomId::D1), std::invalid_argument);
    CHECK_THROWS_AS(find_independence_witness(AxiomId::B5p), std::invalid_argument);
}

TEST_CASE("B4 independence needs three elements; smaller spaces exhaust empty") {
    const IndependenceResult b4 = find_independence_witness(AxiomId::B4);
    REQUIRE(b4.attempts.size() == 3);
    // n = 1: op({}) = {} plus the complement tie force the single zero table.
    CHECK(b4.attempts[0].candidates_examined == 1);
    CHECK(b4.attempts[0].matches == 0);
    CHECK(b4.attempts[0].exhausted);
    // n = 2: one free complement pair, four candidate tables.
    CHECK(b4.attempts[1].candidates_examined == 4);
    CHECK(b4.attempts[1].matches == 0);
    CHECK(b4.attempts[1].exhausted);
    REQUIRE(b4.witness.has_value());
    CHECK(b4.witness_n == 3);
    CHECK_FALSE(axiom_holds(*b4.witness, AxiomId::B4));
    for (AxiomId a : {AxiomId::B1, AxiomId::B2, AxiomId::B3, AxiomId::B5})
        CHECK(axiom_holds(*b4.witness, a));
}

TEST_CASE("proposition verification confirms each small universe") {
    for (int n = 0; n <= 3; ++n) {
        const PropositionReport r = verify_propositions(n);
        CHECK(r.all_confirmed());
        CHECK_FALSE(r.counterexample.has_value());
        CHECK(r.closures == r.boundaries);
        CHECK(r.closures == r.topologies);
        CHECK(r.n == n);
    }
}
