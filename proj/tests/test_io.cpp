#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minkcx/errors.hpp"
#include "minkcx/io.hpp"
#include "minkcx/minkowski.hpp"
#include "minkcx/realize.hpp"

#include "generators.hpp"

using namespace minkcx;

TEST_CASE("complex documents round-trip") {
    const auto cx = from_facets(3, {{2, 3}, {1, 2}});
    const std::string doc = complex_doc(cx);
    CHECK(parse_complex_doc(doc) == cx);
    CHECK(complex_doc(parse_complex_doc(doc)) == doc);  // byte identity

    const std::string void_doc = complex_doc(void_complex(2));
    CHECK(parse_complex_doc(void_doc) == void_complex(2));

    const std::string empty_doc = complex_doc(empty_complex(1));
    CHECK(parse_complex_doc(empty_doc) == empty_complex(1));
}

TEST_CASE("complex document diagnostics") {
    CHECK_THROWS_AS(parse_complex_doc("{"), ParseError);
    CHECK_THROWS_AS(parse_complex_doc(R"({"facets": []})"), ParseError);  // n missing
    CHECK_THROWS_AS(parse_complex_doc(R"({"n": 2, "facets": [[0]]})"), ParseError);
    CHECK_THROWS_AS(parse_complex_doc(R"({"n": 2, "facets": [[3]]})"), ParseError);
    CHECK_THROWS_AS(parse_complex_doc(R"({"n": 2, "facets": []})"), ParseError);
    CHECK_THROWS_AS(parse_complex_doc(R"({"n": 2, "facets": [[1]], "void": true})"), ParseError);
    try {
        parse_complex_doc(R"({"n": 2, "facets": [[1], [0]]})");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("facets[1]") != std::string::npos);
    }
}

TEST_CASE("family documents round-trip with exact fractions") {
    const std::string text = R"({
      "dim": 2,
      "polytopes": [
        {"vertices": [[0, 0], ["1/2", 1]]},
        {"vertices": [[0, 0], [2, "4/6"]]}
      ],
      "mu": ["3/2", 0]
    })";
    const PolytopeFamily fam = parse_family_doc(text);
    CHECK(fam.dim == 2);
    CHECK(fam.members[0].vertices[1] == RatVector{Rational(1, 2), Rational(1)});
    CHECK(fam.members[1].vertices[1] == RatVector{Rational(2), Rational(2, 3)});  // lowest terms
    CHECK(fam.basepoint == RatVector{Rational(3, 2), Rational(0)});

    const std::string emitted = family_doc(fam);
    CHECK(parse_family_doc(emitted) == fam);
    CHECK(family_doc(parse_family_doc(emitted)) == emitted);
    CHECK(emitted.find("\"3/2\"") != std::string::npos);
    CHECK(emitted.find("2/3") != std::string::npos);
}

TEST_CASE("family document diagnostics") {
    CHECK_THROWS_AS(parse_family_doc(R"({"dim": 1, "polytopes": [], "mu": [0.5]})"), ParseError);
    CHECK_THROWS_AS(parse_family_doc(R"({"dim": 1, "polytopes": [{"vertices": [[0],[1,2]]}], "mu": [0]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_family_doc(R"({"dim": 1, "polytopes": [{"vertices": []}], "mu": [0]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_family_doc(R"({"dim": 1, "polytopes": [{"vertices": [[1]]}], "mu": [0]})"),
                    ParseError);  // origin missing
    CHECK_THROWS_AS(parse_family_doc(R"({"dim": 1, "polytopes": [{"vertices": [["1/0"]]}], "mu": [0]})"),
                    ParseError);
}

TEST_CASE("discrete family documents round-trip") {
    const DiscreteFamily dfam = make_discrete_family(
        1, {{{Rational(0)}, {Rational(1)}}, {{Rational(0)}, {Rational(1, 2)}}}, {Rational(3, 2)});
    const std::string doc = discrete_doc(dfam);
    CHECK(parse_discrete_doc(doc) == dfam);
    CHECK(discrete_doc(parse_discrete_doc(doc)) == doc);
    CHECK_THROWS_AS(parse_discrete_doc(R"({"dim": 1, "sets": [[[1]]], "mu": [0]})"), ParseError);
}

TEST_CASE("property: random complexes and families survive the round trip") {
    testgen::Rng rng(221);
    for (int trial = 0; trial < 40; ++trial) {
        const auto cx = testgen::random_complex(rng, static_cast<int>(rng.uniform(1, 6)), 5);
        CHECK(parse_complex_doc(complex_doc(cx)) == cx);

        const auto fam = testgen::random_lattice_family(rng, 3, 2, 3);
        CHECK(parse_family_doc(family_doc(fam)) == fam);
    }
}
