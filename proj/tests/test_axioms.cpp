#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <stdexcept>
#include <vector>

#include "fintop/axioms.hpp"
#include "fintop/gallery.hpp"
#include "fintop/setcore.hpp"
#include "naive_axioms.hpp"

using namespace fintop;

TEST_CASE("axiom names and formulas round-trip") {
    for (AxiomId a : naive::all_axioms) {
        CHECK(parse_axiom_id(to_string(a)) == a);
        CHECK_FALSE(axiom_formula(a).empty());
    }
    CHECK(parse_axiom_id("B5'") == AxiomId::B5p);
    CHECK_FALSE(parse_axiom_id("Q7").has_value());
    CHECK_FALSE(parse_axiom_id("").has_value());
    CHECK(axiom_is_binary(AxiomId::B3));
    CHECK(axiom_is_binary(AxiomId::D4));
    CHECK_FALSE(axiom_is_binary(AxiomId::B5));
    CHECK_FALSE(axiom_is_binary(AxiomId::B1));
}

TEST_CASE("identity operator is a closure but not a boundary") {
    const OperatorTable id = OperatorTable::identity(Universe(3));
    for (AxiomId a : delta_axioms) CHECK(axiom_holds(id, a));
    const Classification c = classify(id);
    CHECK(c.is_closure);
    CHECK_FALSE(c.is_boundary);
}

TEST_CASE("constant-empty operator is a boundary but not a closure") {
    const Universe u(3);
    const OperatorTable z = OperatorTable::constant(u, SubsetMask::empty(u));
    for (AxiomId a : beta_axioms) CHECK(axiom_holds(z, a));
    CHECK(axiom_holds(z, AxiomId::B5p));
    const Classification c = classify(z);
    CHECK(c.is_boundary);
    CHECK_FALSE(c.is_closure);  // D5 fails: {0} is not inside op({0}) = {}
}

TEST_CASE("the unique operator on the empty universe is both") {
    const OperatorTable op(Universe(0), {0});
    const Classification c = classify(op);
    CHECK(c.is_closure);
    CHECK(c.is_boundary);
    CHECK(check_system(op, AxiomSystem::delta).system_holds());
    CHECK(check_system(op, AxiomSystem::beta).system_holds());
}

TEST_CASE("first violations carry the smallest witnessing data") {
    SECTION("B1 on the constant-X operator at n = 1") {
        const std::vector<Violation> vs = check_axiom(make_d1(1), AxiomId::B1);
        REQUIRE(vs.size() == 1);
        CHECK(vs[0].witness_a.is_empty());
        CHECK_FALSE(vs[0].witness_b.has_value());
        CHECK(vs[0].element == 0);
        CHECK(vs[0].side == WitnessSide::left);
    }
    SECTION("B3 on the complement-doubleton operator") {
        const std::vector<Violation> vs = check_axiom(make_d3(), AxiomId::B3);
        REQUIRE_FALSE(vs.empty());
        const Violation& v = vs.front();
        CHECK(v.witness_a.code() == 1);
        REQUIRE(v.witness_b.has_value());
        CHECK(v.witness_b->code() == 2);
        CHECK(v.element == 2);
        CHECK(v.side == WitnessSide::left);
    }
    SECTION("B5 on the add-x0 operator at n = 2 reports the unbalanced side") {
        const std::vector<Violation> vs = check_axiom(make_d5(2, 0), AxiomId::B5);
        REQUIRE(vs.size() == 4);
        CHECK(vs.front().witness_a.is_empty());
        CHECK(vs.front().element == 0);
        CHECK(vs.front().side == WitnessSide::right);  // 0 is in op(X), not in op({})
        bool has_whole = false;
        for (const Violation& v : vs) has_whole |= v.witness_a.is_whole();
        CHECK(has_whole);  // A = X always witnesses a B5 failure when one exists
    }
}

TEST_CASE("violations stream in lexicographic witness order") {
    const std::vector<Violation> vs = check_axiom(make_d4(), AxiomId::B4);
    REQUIRE_FALSE(vs.empty());
    CHECK(vs.front().witness_a.code() == 1);
    CHECK(vs.front().witness_b->code() == 5);
    CHECK(vs.front().element == 1);
    for (std::size_t i = 1; i < vs.size(); ++i) {
        const std::uint32_t a0 = vs[i - 1].witness_a.code(), a1 = vs[i].witness_a.code();
        const std::uint32_t b0 = vs[i - 1].witness_b->code(), b1 = vs[i].witness_b->code();
        CHECK((a0 < a1 || (a0 == a1 && b0 < b1)));
    }
}

TEST_CASE("axiom status summarizes count and first violation") {
    const AxiomStatus st = check_axiom_status(make_d3(), AxiomId::B3);
    CHECK_FALSE(st.holds());
    CHECK(st.violation_count == check_axiom(make_d3(), AxiomId::B3).size());
    REQUIRE(st.first.has_value());
    CHECK(st.first->witness_a.code() == 1);

    const AxiomStatus ok = check_axiom_status(make_d3(), AxiomId::B5);
    CHECK(ok.holds());
    CHECK_FALSE(ok.first.has_value());
}

TEST_CASE("check_system covers the advertised axiom lists") {
    const CheckReport delta =
        check_system(OperatorTable::identity(Universe(2)), AxiomSystem::delta);
    REQUIRE(delta.axioms.size() == 5);
    CHECK(delta.system_holds());
    CHECK(delta.status(AxiomId::D4).holds());
    CHECK_THROWS_AS(delta.status(AxiomId::B1), std::out_of_range);

    const CheckReport beta = check_system(make_d5(2, 0), AxiomSystem::beta);
    REQUIRE(beta.axioms.size() == 6);  // B1..B5 plus the weaker one-sided B5'
    CHECK_FALSE(beta.system_holds());
    CHECK(beta.status(AxiomId::B1).holds());
    CHECK(beta.status(AxiomId::B5p).violation_count > 0);
}

TEST_CASE("B5' rides along without deciding the beta verdict") {
    // B5' is implied by B5, so any operator failing B5' also fails B5;
    // system_holds() is determined by B1..B5 alone.
    const CheckReport beta = check_system(make_d5(3, 1), AxiomSystem::beta);
    CHECK_FALSE(beta.status(AxiomId::B5).holds());
    CHECK_FALSE(beta.status(AxiomId::B5p).holds());
    CHECK_FALSE(beta.system_holds());
}

TEST_CASE("optimized checker agrees with the quantifier-expansion oracle") {
    std::mt19937 rng(2026);
    for (int n : {0, 1, 3}) {
        const Universe u(n);
        for (int k = 0; k < 60; ++k) {
            std::vector<std::uint32_t> t(u.subset_count());
            for (std::uint32_t& v : t) v = rng() % u.subset_count();
            const OperatorTable op(u, t);
            for (AxiomId a : naive::all_axioms) {
                const std::vector<naive::NaiveViolation> expected = naive::check(op, a);
                const std::vector<naive::NaiveViolation> got =
                    naive::flatten(check_axiom(op, a));
                REQUIRE(got == expected);
                REQUIRE(axiom_holds(op, a) == expected.empty());
            }
        }
    }
}
