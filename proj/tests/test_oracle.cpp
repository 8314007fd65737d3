#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minkcx/oracle.hpp"

#include "generators.hpp"

using namespace minkcx;

namespace {

RatVector rv(std::initializer_list<long long> coords) {
    RatVector v;
    for (long long c : coords) v.emplace_back(c);
    return v;
}

}  // namespace

TEST_CASE("box membership by interval arithmetic") {
    const auto fam = make_family(1, {make_box(rv({1})), make_box(rv({2}))}, rv({0}));
    CHECK(oracle_box_membership(fam, 0b11, rv({3})));
    CHECK_FALSE(oracle_box_membership(fam, 0b11, {Rational(7, 2)}));
    CHECK(oracle_box_membership(fam, 0, rv({0})));
    CHECK_FALSE(oracle_box_membership(fam, 0, rv({1})));

    const auto tri = make_family(2, {make_polytope(2, {rv({0, 0}), rv({1, 0}), rv({0, 1})})},
                                 rv({0, 0}));
    CHECK_THROWS_AS(oracle_box_membership(tri, 0b1, rv({0, 0})), std::domain_error);
}

TEST_CASE("full-enumeration Euler characteristic") {
    CHECK(oracle_euler(empty_complex(2)) == -1);
    CHECK(oracle_euler(from_facets(2, {{1}, {2}})) == 1);
    CHECK(oracle_euler(void_complex(3)) == 0);
    CHECK(oracle_euler(from_facets(3, {{1, 2}, {2, 3}, {1, 3}})) == -1);

    testgen::Rng rng(211);
    for (int trial = 0; trial < 80; ++trial) {
        const auto cx = testgen::random_complex(rng, static_cast<int>(rng.uniform(1, 6)), 5);
        CHECK(oracle_euler(cx) == reduced_euler(cx));
    }
}

TEST_CASE("grid search for threshold certificates") {
    const auto path = from_facets(3, {{1, 2}, {2, 3}});
    const auto cert = oracle_threshold_bruteforce(path, 2);
    REQUIRE(cert.has_value());
    CHECK(cert->weights == std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    CHECK(cert->threshold == 2);

    const auto c4 = from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK_FALSE(oracle_threshold_bruteforce(c4, 4).has_value());

    const auto full = oracle_threshold_bruteforce(full_simplex(3), 2);
    REQUIRE(full.has_value());
    CHECK(full->weights == std::vector<Rational>{Rational(0), Rational(0), Rational(0)});
    CHECK(full->threshold == 1);

    CHECK_THROWS_AS(oracle_threshold_bruteforce(full_simplex(5), 2), std::invalid_argument);
}
