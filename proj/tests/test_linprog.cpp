#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minkcx/linprog.hpp"

#include "generators.hpp"

using namespace minkcx;

TEST_CASE("single bounded variable maximum") {
    LinearProgram lp;
    lp.num_vars = 1;
    lp.set_lower(0, Rational(0));
    lp.set_upper(0, Rational(3));
    lp.objective = Objective{{Rational(1)}, Sense::Maximize};
    const LPResult r = lp_solve(lp);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(*r.objective_value == 3);
    CHECK((*r.witness)[0] == 3);
}

TEST_CASE("contradictory bounds are infeasible") {
    LinearProgram lp;
    lp.num_vars = 1;
    lp.add_constraint({Rational(1)}, Relation::GreaterEq, Rational(1));
    lp.add_constraint({Rational(1)}, Relation::LessEq, Rational(0));
    CHECK(lp_feasible(lp).status == LPStatus::Infeasible);
}

TEST_CASE("triangle optimum is exactly 5/2") {
    // max x+y over the triangle x+y <= 5/2, x,y >= 0; both nonzero vertices
    // give 5/2 by hand enumeration.
    LinearProgram lp;
    lp.num_vars = 2;
    lp.set_lower(0, Rational(0));
    lp.set_lower(1, Rational(0));
    lp.add_constraint({Rational(1), Rational(1)}, Relation::LessEq, Rational(5, 2));
    lp.objective = Objective{{Rational(1), Rational(1)}, Sense::Maximize};
    const LPResult r = lp_solve(lp);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(*r.objective_value == Rational(5, 2));
}

TEST_CASE("pinned variable feasibility returns the witness") {
    LinearProgram lp;
    lp.num_vars = 1;
    lp.set_lower(0, Rational(0));
    lp.set_upper(0, Rational(1));
    lp.add_constraint({Rational(1)}, Relation::Equal, Rational(1, 2));
    const LPResult r = lp_feasible(lp);
    REQUIRE(r.status == LPStatus::FeasibleNoObjective);
    CHECK((*r.witness)[0] == Rational(1, 2));
}

TEST_CASE("equality clashing with bounds is infeasible") {
    LinearProgram lp;
    lp.num_vars = 2;
    lp.set_lower(0, Rational(2));
    lp.set_lower(1, Rational(0));
    lp.add_constraint({Rational(1), Rational(1)}, Relation::Equal, Rational(1));
    CHECK(lp_feasible(lp).status == LPStatus::Infeasible);
}

TEST_CASE("convex combination system for the square centroid") {
    // (1,1) over corners (0,0),(2,0),(0,2),(2,2): weights 1/4 each work.
    const std::vector<RatVector> corners{{Rational(0), Rational(0)},
                                         {Rational(2), Rational(0)},
                                         {Rational(0), Rational(2)},
                                         {Rational(2), Rational(2)}};
    LinearProgram lp;
    lp.num_vars = 4;
    lp.bounds.resize(4);
    for (auto& b : lp.bounds) b.lower = Rational(0);
    lp.add_constraint({Rational(1), Rational(1), Rational(1), Rational(1)}, Relation::Equal,
                      Rational(1));
    for (int c = 0; c < 2; ++c) {
        RatVector row(4);
        for (int j = 0; j < 4; ++j) row[j] = corners[j][c];
        lp.add_constraint(std::move(row), Relation::Equal, Rational(1));
    }
    const LPResult r = lp_feasible(lp);
    REQUIRE(r.status == LPStatus::FeasibleNoObjective);
    CHECK(lp_check_witness(lp, *r.witness));
}

TEST_CASE("unbounded ray is detected") {
    LinearProgram lp;
    lp.num_vars = 1;
    lp.set_lower(0, Rational(0));
    lp.objective = Objective{{Rational(1)}, Sense::Maximize};
    const LPResult r = lp_solve(lp);
    CHECK(r.status == LPStatus::Unbounded);
    CHECK(r.witness.has_value());
}

TEST_CASE("dimension mismatch is a structural error") {
    LinearProgram lp;
    lp.num_vars = 2;
    lp.add_constraint({Rational(1)}, Relation::LessEq, Rational(1));
    CHECK_THROWS_AS(lp_solve(lp), std::invalid_argument);
}

namespace {

LinearProgram random_lp(testgen::Rng& rng) {
    LinearProgram lp;
    lp.num_vars = static_cast<int>(rng.uniform(1, 4));
    lp.bounds.resize(static_cast<std::size_t>(lp.num_vars));
    for (auto& b : lp.bounds) {
        b.lower = Rational(0);
        if (rng.uniform(0, 1)) b.upper = Rational(rng.uniform(1, 5));
    }
    const int rows = static_cast<int>(rng.uniform(1, 4));
    for (int r = 0; r < rows; ++r) {
        RatVector coeffs(static_cast<std::size_t>(lp.num_vars));
        for (auto& c : coeffs) c = rng.uniform(-3, 3);
        const Relation rel = rng.uniform(0, 2) == 0   ? Relation::LessEq
                             : rng.uniform(0, 1) == 0 ? Relation::GreaterEq
                                                      : Relation::Equal;
        lp.add_constraint(std::move(coeffs), rel, Rational(rng.uniform(-4, 8)));
    }
    RatVector obj(static_cast<std::size_t>(lp.num_vars));
    for (auto& c : obj) c = rng.uniform(-3, 3);
    lp.objective = Objective{std::move(obj), Sense::Maximize};
    return lp;
}

}  // namespace

TEST_CASE("witnesses satisfy every constraint exactly") {
    testgen::Rng rng(101);
    int feasible_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const LinearProgram lp = random_lp(rng);
        const LPResult r = lp_solve(lp);
        if (r.status == LPStatus::Infeasible) {
            CHECK(!r.witness.has_value());
            continue;
        }
        ++feasible_seen;
        REQUIRE(r.witness.has_value());
        CHECK(lp_check_witness(lp, *r.witness));
    }
    CHECK(feasible_seen > 20);
}

TEST_CASE("negating the objective flips the optimum sign") {
    testgen::Rng rng(202);
    int optimal_seen = 0;
    for (int trial = 0; trial < 100; ++trial) {
        LinearProgram lp = random_lp(rng);
        const LPResult fwd = lp_solve(lp);
        if (fwd.status != LPStatus::Optimal) continue;
        ++optimal_seen;
        for (auto& c : lp.objective->coeffs) c = -c;
        lp.objective->sense = Sense::Minimize;
        const LPResult bwd = lp_solve(lp);
        REQUIRE(bwd.status == LPStatus::Optimal);
        CHECK(*fwd.objective_value == -*bwd.objective_value);
    }
    CHECK(optimal_seen > 10);
}

TEST_CASE("rationals normalize to lowest terms") {
    testgen::Rng rng(303);
    for (int trial = 0; trial < 100; ++trial) {
        const long long p = rng.uniform(-20, 20);
        const long long q = rng.uniform(1, 20);
        const long long k = rng.uniform(1, 15) * (rng.uniform(0, 1) ? 1 : -1);
        const Rational a = make_rational(p, q);
        const Rational b = make_rational(p * k, q * k);
        CHECK(a == b);
        CHECK(numerator(a) == numerator(b));
        CHECK(denominator(a) == denominator(b));
        CHECK(denominator(a) > 0);
    }
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("6/-4") == make_rational(3, -2));
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}
