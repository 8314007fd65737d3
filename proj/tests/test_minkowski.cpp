#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minkcx/minkowski.hpp"
#include "minkcx/oracle.hpp"

#include "generators.hpp"

using namespace minkcx;

namespace {

RatVector rv(std::initializer_list<long long> coords) {
    RatVector v;
    for (long long c : coords) v.emplace_back(c);
    return v;
}

PolytopeFamily segments_1d(const RatVector& mu) {  // ([0,1], [0,2])
    return make_family(1,
                       {make_polytope(1, {rv({0}), rv({1})}),
                        make_polytope(1, {rv({0}), rv({2})})},
                       mu);
}

PolytopeFamily axis_segments(const RatVector& mu) {  // (conv{0,e1}, conv{0,e2})
    return make_family(2,
                       {make_polytope(2, {rv({0, 0}), rv({1, 0})}),
                        make_polytope(2, {rv({0, 0}), rv({0, 1})})},
                       mu);
}

}  // namespace

TEST_CASE("Minkowski complex at selected basepoints") {
    CHECK(minkowski_complex(segments_1d(rv({2}))) == from_facets(2, {{1}}));
    CHECK(minkowski_complex(segments_1d(rv({0}))) == void_complex(2));
    CHECK(minkowski_complex(axis_segments(rv({1, 1}))) == from_facets(2, {{1}, {2}}));
    CHECK(minkowski_complex(axis_segments(rv({5, 5}))) == full_simplex(2));
}

TEST_CASE("discrete volume") {
    const auto fam = axis_segments(rv({0, 0}));
    CHECK(discrete_volume(fam, 0b01) == 2);
    CHECK(discrete_volume(fam, 0) == 1);  // P_empty = {0}
    CHECK(discrete_volume(fam, 0b11) == 4);
    const auto nonlattice =
        make_family(1, {make_polytope(1, {rv({0}), {Rational(1, 2)}})}, rv({0}));
    CHECK_THROWS_AS(discrete_volume(nonlattice, 0b1), std::domain_error);
}

TEST_CASE("discrete mixed volume") {
    const auto single = make_family(1, {make_polytope(1, {rv({0}), rv({1})})}, rv({0}));
    CHECK(discrete_mixed_volume(single) == 1);  // 2 - 1
    CHECK(discrete_mixed_volume(axis_segments(rv({0, 0}))) == 1);  // 4 - 2 - 2 + 1
    const auto twin = make_family(1,
                                  {make_polytope(1, {rv({0}), rv({1})}),
                                   make_polytope(1, {rv({0}), rv({1})})},
                                  rv({0}));
    CHECK(discrete_mixed_volume(twin) == 0);  // 3 - 2 - 2 + 1
}

TEST_CASE("alternating indicator sum") {
    const auto fam = axis_segments(rv({0, 0}));
    CHECK(indicator_f(fam, rv({1, 1})) == 1);  // only the full sum contains it
    CHECK(indicator_f(fam, rv({0, 0})) == 0);  // binomial alternating sum
    CHECK(indicator_f(fam, rv({9, 9})) == 0);  // outside everything
}

TEST_CASE("identity verifier on worked families") {
    const auto report = verify_theorem1(axis_segments(rv({0, 0})));
    CHECK(report.cme == 1);
    CHECK(report.sign == 1);
    CHECK(report.euler_sum == 1);
    CHECK(report.identity_holds);
    REQUIRE(report.per_point.size() == 4);
    CHECK(report.per_point[0].second == 0);
    CHECK(report.per_point[1].second == 0);
    CHECK(report.per_point[2].second == 0);
    CHECK(report.per_point[3].second == 1);  // chi~ = 1 at (1,1)

    const auto single = make_family(1, {make_polytope(1, {rv({0}), rv({1})})}, rv({0}));
    const auto r1 = verify_theorem1(single);
    CHECK(r1.cme == 1);
    CHECK(r1.sign == -1);
    REQUIRE(r1.per_point.size() == 2);
    CHECK(r1.per_point[0].second == 0);   // mu = 0: void complex
    CHECK(r1.per_point[1].second == -1);  // mu = 1: the empty complex
    CHECK(r1.euler_sum == -1);
    CHECK(r1.identity_holds);

    const auto origin_only = make_family(1, {make_polytope(1, {rv({0})})}, rv({0}));
    const auto r0 = verify_theorem1(origin_only);
    CHECK(r0.cme == 0);
    CHECK(r0.euler_sum == 0);
    CHECK(r0.identity_holds);
}

TEST_CASE("property: pointwise identity at rational probes") {
    testgen::Rng rng(111);
    for (int trial = 0; trial < 25; ++trial) {
        const auto base = testgen::random_lattice_family(rng, 3, 2, 3);
        const int sign = base.size() % 2 == 0 ? 1 : -1;
        for (int probe = 0; probe < 4; ++probe) {
            PolytopeFamily fam = base;
            fam.basepoint = testgen::random_rational_point(rng, fam.dim, -1, 8, 3);
            CHECK(sign * indicator_f(fam, fam.basepoint) ==
                  reduced_euler(minkowski_complex(fam)));
        }
    }
}

TEST_CASE("property: shrinking members cannot raise the mixed volume") {
    testgen::Rng rng(121);
    for (int trial = 0; trial < 25; ++trial) {
        const auto big = testgen::random_lattice_family(rng, 3, 2, 3);
        const auto small = testgen::shrink_family(rng, big);
        const long long cme_big = discrete_mixed_volume(big);
        const long long cme_small = discrete_mixed_volume(small);
        CHECK(0 <= cme_small);
        CHECK(cme_small <= cme_big);
    }
}
