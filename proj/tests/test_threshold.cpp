#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minkcx/oracle.hpp"
#include "minkcx/threshold.hpp"

#include "generators.hpp"

using namespace minkcx;

namespace {

const SimplicialComplex kPath = from_facets(3, {{1, 2}, {2, 3}});
const SimplicialComplex kC4 = from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
const SimplicialComplex kP4 = from_facets(4, {{1, 2}, {2, 3}, {3, 4}});
const SimplicialComplex kTwoK2 = from_facets(4, {{1, 2}, {3, 4}});

std::vector<Rational> weights(std::initializer_list<Rational> ws) { return ws; }

}  // namespace

TEST_CASE("threshold complex construction") {
    CHECK(threshold_complex(weights({Rational(1), Rational(1)}), Rational(2)) ==
          from_facets(2, {{1}, {2}}));
    CHECK(threshold_complex(weights({Rational(0), Rational(0), Rational(0)}), Rational(1)) ==
          full_simplex(3));
    CHECK(threshold_complex(weights({Rational(1), Rational(1)}), Rational(1)) ==
          empty_complex(2));
    CHECK_THROWS_AS(threshold_complex(weights({Rational(2)}), Rational(1)), std::out_of_range);
}

TEST_CASE("threshold recognition") {
    const auto cert = recognize_threshold(kPath);
    REQUIRE(cert.has_value());
    CHECK(cert->threshold == 1);
    CHECK(cert->weights == weights({Rational(1, 2), Rational(0), Rational(1, 2)}));

    CHECK_FALSE(recognize_threshold(kC4).has_value());
    CHECK_FALSE(recognize_threshold(kP4).has_value());
    CHECK_FALSE(recognize_threshold(kTwoK2).has_value());

    const auto full = recognize_threshold(full_simplex(3));
    REQUIRE(full.has_value());
    CHECK(full->weights == weights({Rational(0), Rational(0), Rational(0)}));

    const auto empty = recognize_threshold(empty_complex(2));
    REQUIRE(empty.has_value());
    CHECK(threshold_complex(empty->weights, empty->threshold) == empty_complex(2));

    CHECK_THROWS_AS(recognize_threshold(void_complex(2)), std::domain_error);
}

TEST_CASE("forbidden quadruples") {
    const auto two_k2 = find_forbidden(kTwoK2);
    REQUIRE(two_k2.has_value());
    CHECK(two_k2->a == 1);
    CHECK(two_k2->b == 2);
    CHECK(two_k2->c == 3);
    CHECK(two_k2->d == 4);
    CHECK(two_k2->shape == ForbiddenShape::TwoK2);

    const auto c4 = find_forbidden(kC4);
    REQUIRE(c4.has_value());
    CHECK(c4->shape == ForbiddenShape::C4);

    const auto p4 = find_forbidden(kP4);
    REQUIRE(p4.has_value());
    CHECK(p4->shape == ForbiddenShape::P4);

    CHECK_FALSE(find_forbidden(kPath).has_value());
    CHECK_FALSE(find_forbidden(full_simplex(5)).has_value());
}

TEST_CASE("witness edges and nonedges are faces and nonfaces") {
    for (const auto& cx : {kC4, kP4, kTwoK2}) {
        const auto w = find_forbidden(cx);
        REQUIRE(w.has_value());
        CHECK(member(cx, subset_of({w->a, w->b}, cx.n)));
        CHECK(member(cx, subset_of({w->c, w->d}, cx.n)));
        CHECK_FALSE(member(cx, subset_of({w->a, w->c}, cx.n)));
        CHECK_FALSE(member(cx, subset_of({w->b, w->d}, cx.n)));
    }
}

TEST_CASE("lower bounds from the join theorem") {
    const auto [c4_bound, c4_ev] = ctd_lower_bound(kC4);
    CHECK(c4_bound == 2);
    REQUIRE(c4_ev.groups.size() == 1);
    CHECK(c4_ev.groups[0].vertices == 0b1111);
    CHECK(c4_ev.base_kind == BaseKind::Empty);

    const auto cc = join(kC4, kC4);
    const auto [cc_bound, cc_ev] = ctd_lower_bound(cc);
    CHECK(cc_bound == 3);
    CHECK(cc_ev.groups.size() == 2);
    // the evidence chain is re-checkable: each group's witness pattern holds
    // in the original complex, inside the group's vertex set
    for (const auto& g : cc_ev.groups) {
        const Subset quad = subset_of({g.witness.a, g.witness.b, g.witness.c, g.witness.d}, cc.n);
        CHECK((quad & g.vertices) == quad);
        CHECK(member(cc, subset_of({g.witness.a, g.witness.b}, cc.n)));
        CHECK(member(cc, subset_of({g.witness.c, g.witness.d}, cc.n)));
        CHECK_FALSE(member(cc, subset_of({g.witness.a, g.witness.c}, cc.n)));
        CHECK_FALSE(member(cc, subset_of({g.witness.b, g.witness.d}, cc.n)));
    }

    const auto [path_bound, path_ev] = ctd_lower_bound(kPath);
    CHECK(path_bound == 1);
    CHECK(path_ev.base_kind == BaseKind::Threshold);

    const auto [empty_bound, empty_ev] = ctd_lower_bound(empty_complex(2));
    CHECK(empty_bound == 0);
    CHECK(empty_ev.phantom_vertices == 0b11);
}

TEST_CASE("upper bounds carry verified realizations") {
    const auto [path_dim, path_ev] = ctd_upper_bound(kPath, 16, 1);
    CHECK(path_dim == 1);
    CHECK(path_ev.via_threshold);
    CHECK(family_realizes(path_ev.family, kPath));

    const auto [full_dim, full_ev] = ctd_upper_bound(full_simplex(3), 16, 1);
    CHECK(full_dim == 1);

    const auto [c4_dim, c4_ev] = ctd_upper_bound(kC4, 16, 1);
    CHECK(c4_dim >= 2);
    CHECK(c4_dim <= 4);  // box construction uses one dimension per facet
    CHECK_FALSE(c4_ev.via_threshold);
    CHECK(family_realizes(c4_ev.family, kC4));
}

TEST_CASE("bounds are consistent on assorted complexes") {
    testgen::Rng rng(131);
    for (int trial = 0; trial < 12; ++trial) {
        const auto cx = testgen::random_complex(rng, static_cast<int>(rng.uniform(1, 5)), 3);
        const CtdBounds bounds = ctd_bounds(cx, 8, 3);
        CHECK(bounds.lower >= 0);
        CHECK(bounds.lower <= bounds.upper);
        CHECK(family_realizes(bounds.upper_evidence.family, cx));
    }
}

TEST_CASE("property: certificates regenerate their complexes") {
    testgen::Rng rng(141);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 7));
        const auto cx = threshold_complex(testgen::random_weights(rng, n), Rational(1));
        if (cx.is_void) continue;
        const auto cert = recognize_threshold(cx);
        REQUIRE(cert.has_value());
        CHECK(threshold_complex(cert->weights, cert->threshold) == cx);
    }
}

TEST_CASE("property: a forbidden witness excludes a certificate") {
    testgen::Rng rng(151);
    for (int trial = 0; trial < 60; ++trial) {
        const auto cx = testgen::random_complex(rng, static_cast<int>(rng.uniform(2, 6)), 4);
        if (find_forbidden(cx)) CHECK_FALSE(recognize_threshold(cx).has_value());
    }
}

TEST_CASE("property: graphs without the pattern are threshold") {
    // The witness-free direction is a statement about graphs; check it on
    // 1-dimensional complexes only.
    testgen::Rng rng(161);
    int graphs = 0;
    for (int trial = 0; trial < 200 && graphs < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform(2, 5));
        std::vector<Subset> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng.uniform(0, 1))
                    edges.push_back((Subset(1) << (u - 1)) | (Subset(1) << (v - 1)));
        for (int v = 1; v <= n; ++v) edges.push_back(Subset(1) << (v - 1));
        const auto cx = from_facet_masks(n, edges);
        if (find_forbidden(cx)) continue;
        ++graphs;
        CHECK(recognize_threshold(cx).has_value());
    }
    CHECK(graphs >= 20);
}

TEST_CASE("property: joining a forbidden factor raises the lower bound") {
    testgen::Rng rng(171);
    const SimplicialComplex figures[3] = {kTwoK2, kP4, kC4};
    for (int trial = 0; trial < 15; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 4));
        const auto delta = threshold_complex(testgen::random_weights(rng, n), Rational(1));
        if (delta.is_void) continue;
        const auto& gamma = figures[rng.uniform(0, 2)];
        const auto [joined, ev] = ctd_lower_bound(join(delta, gamma));
        const auto [alone, ev2] = ctd_lower_bound(delta);
        CHECK(joined >= alone + 1);
    }
}

TEST_CASE("oracle certificates imply recognizer certificates") {
    testgen::Rng rng(181);
    for (int trial = 0; trial < 40; ++trial) {
        const auto cx = testgen::random_complex(rng, static_cast<int>(rng.uniform(1, 4)), 4);
        const auto brute = oracle_threshold_bruteforce(cx, 3);
        if (brute) {
            CHECK(threshold_complex(brute->weights, brute->threshold) == cx);
            CHECK(recognize_threshold(cx).has_value());
        }
    }
}
