/*
 * Minkowski complexes, discrete (mixed) volume, and the identity verifier
 * relating the two through reduced Euler characteristics.
 */

#pragma once

#include "minkcx/polytope.hpp"
#include "minkcx/simplicial_complex.hpp"

#include <vector>

namespace minkcx {

/**
 * The complex of index sets sigma with basepoint not in P_sigma. Subsets are
 * classified top-down by descending size; any subset of a known face is a
 * face without another LP. Returns the void complex iff the basepoint is 0.
 */
SimplicialComplex minkowski_complex(const PolytopeFamily& fam);

/** |P_sigma restricted to the integer lattice|; members must be lattice polytopes. */
long long discrete_volume(const PolytopeFamily& fam, Subset sigma,
                          long long cell_budget = kDefaultCellBudget);

/** Alternating inclusion-exclusion sum of discrete volumes over all subsets. */
long long discrete_mixed_volume(const PolytopeFamily& fam,
                                long long cell_budget = kDefaultCellBudget);

/** sum over subsets I of (-1)^(n-|I|) [x in P_I]. */
long long indicator_f(const PolytopeFamily& fam, const RatVector& x);

struct Thm1Report {
    long long cme = 0;
    int sign = 1;  // (-1)^n
    std::vector<std::pair<RatVector, long long>> per_point;  // lattice point, chi~
    long long euler_sum = 0;
    bool identity_holds = false;
};

/**
 * Compute both sides of the identity sign * CME = sum of chi~ over lattice
 * points of P_[n], each side independently, and cross-check the pointwise
 * identity sign * F(mu) = chi~(Delta(P;mu)) at every enumerated point plus a
 * sample of box points outside P_[n].
 */
Thm1Report verify_theorem1(const PolytopeFamily& fam,
                           long long cell_budget = kDefaultCellBudget);

}  // namespace minkcx
