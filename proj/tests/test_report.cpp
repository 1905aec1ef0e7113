#include "doctest.h"

#include "jtkk/catalog.hpp"
#include "jtkk/report.hpp"

using namespace jtkk;

TEST_CASE("machine report round trips and covers the human report") {
    std::vector<Report> rs{verify_jordan(j19()), verify_lie(lie_catalog("psl:2"), true), dims_report(kac_k())};
    std::string text = render_machine(rs);
    CHECK(parse_machine(text) == rs);
    CHECK(render_machine(parse_machine(text)) == text);
    std::string human = render_human(rs);
    for (const auto& r : rs)
        for (const auto& s : r.sections)
            for (const auto& c : s.checks) {
                CHECK(human.find(c.name) != std::string::npos);
                CHECK(text.find(c.name) != std::string::npos);
            }
    CHECK_THROWS_AS(parse_machine("{\"format\": \"other\", \"version\": 1}"), ParseError);
}

TEST_CASE("j19 report names the chain counterexample") {
    Report r = verify_jordan(j19());
    CHECK(r.ok());
    REQUIRE(r.fact("chain hypothesis fails"));
    CHECK(r.fact("chain hypothesis fails")->value == "L_{e2} ∈ Inn(V)");
    REQUIRE(r.find("counterexamples"));
    CHECK(r.find("unital equivalences") == nullptr);
}

TEST_CASE("kacK report") {
    Report r = verify_jordan(kac_k());
    CHECK(r.ok());
    REQUIRE(r.fact("Kan ≇ Ko"));
    CHECK(r.fact("Out(Ko) dims")->value == "(1,1,1)");
    CHECK(r.check("Out(Ko~) = 0")->pass);
}

TEST_CASE("unital entries get the equivalence section") {
    Report r = verify_jordan(jordan_catalog("form:1,2"));
    CHECK(r.ok());
    REQUIRE(r.find("unital equivalences"));
    CHECK(r.find("counterexamples") == nullptr);
}

TEST_CASE("dims report values") {
    Report r = dims_report(j19());
    CHECK(r.fact("istr")->value == "2 (2|0)");
    CHECK(r.fact("str")->value == "3 (3|0)");
    CHECK(r.fact("pair_inn")->value == "3 (3|0)");
    CHECK(r.fact("pair_der")->value == "5 (5|0)");
    Report t = dims_report(trunc_poly(5));
    CHECK(t.fact("istr")->value.rfind("3 ", 0) == 0);
    CHECK(t.fact("istr~")->value.rfind("2 ", 0) == 0);
}

TEST_CASE("tkk report and constructions") {
    Report r = tkk_report(kac_k(), Construction::ko);
    CHECK(r.fact("graded dims")->value == "(3,8,3)");
    CHECK(r.fact("jordan-graded")->value == "yes");
    CHECK(r.find("Der tower"));
    CHECK(tkk_report(jordan_catalog("full_matrix:1,1"), Construction::kotilde).fact("total")->value == "17");
    CHECK(parse_construction("ti-der") == Construction::ti_der);
    CHECK_THROWS_AS(parse_construction("tits"), std::invalid_argument);
}

TEST_CASE("sources") {
    CHECK(load_source("j19").jordan);
    CHECK(load_source("gl:1,1").lie);
    CHECK_THROWS_AS(load_source("no_such_thing"), CatalogError);
}
