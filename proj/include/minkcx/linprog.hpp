/*
 * Exact linear programming over the rationals.
 *
 * Textbook two-phase simplex with Bland's rule on a dense rational tableau.
 * Bland's rule rules out cycling, so the solver terminates on every input;
 * all classifications, witnesses and optima are exact. Problem sizes here
 * are tens of rows, so dense pivoting is adequate.
 */

#pragma once

#include "minkcx/rational.hpp"

#include <optional>
#include <vector>

namespace minkcx {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Maximize, Minimize };

struct LinearConstraint {
    RatVector coeffs;  // length num_vars
    Relation rel;
    Rational rhs;
};

struct Objective {
    RatVector coeffs;  // length num_vars
    Sense sense;
};

struct VariableBounds {
    std::optional<Rational> lower;  // absent = unbounded below
    std::optional<Rational> upper;  // absent = unbounded above
};

/**
 * A small linear program. Variables are free unless bounds are given
 * (bounds list is either empty or one entry per variable).
 */
struct LinearProgram {
    int num_vars = 0;
    std::vector<LinearConstraint> constraints;
    std::optional<Objective> objective;
    std::vector<VariableBounds> bounds;

    void add_constraint(RatVector coeffs, Relation rel, Rational rhs);
    void set_lower(int var, Rational lo);
    void set_upper(int var, Rational hi);
};

enum class LPStatus { Infeasible, Optimal, Unbounded, FeasibleNoObjective };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    std::optional<RatVector> witness;        // a feasible (optimal, if Optimal) point
    std::optional<Rational> objective_value; // present iff Optimal
};

/**
 * Solve the program. With an objective the result is Optimal, Unbounded or
 * Infeasible; without one it is FeasibleNoObjective or Infeasible. Throws
 * std::invalid_argument on dimension mismatches.
 */
LPResult lp_solve(const LinearProgram& lp);

/** Feasibility check; the program must not carry an objective. */
LPResult lp_feasible(const LinearProgram& lp);

/** True iff the point satisfies every constraint and bound exactly. */
bool lp_check_witness(const LinearProgram& lp, const RatVector& point);

}  // namespace minkcx
