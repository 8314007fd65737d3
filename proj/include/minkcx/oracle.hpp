/*
 * Brute-force reference implementations used by tests and example
 * generation. Deliberately simple and algorithmically independent of the
 * main path: nothing here calls the LP solver.
 */

#pragma once

#include "minkcx/polytope.hpp"
#include "minkcx/simplicial_complex.hpp"
#include "minkcx/threshold.hpp"

#include <optional>

namespace minkcx {

/**
 * Membership in a Minkowski sum of axis-parallel boxes [0, t_i] by interval
 * arithmetic: x lies in the sum iff 0 <= x_j <= sum of the t_ij. Members
 * must be such boxes (their vertex lists are checked).
 */
bool oracle_box_membership(const PolytopeFamily& fam, Subset sigma, const RatVector& x);

/** Reduced Euler characteristic by full 2^n face enumeration (n <= 20). */
long long oracle_euler(const SimplicialComplex& cx);

/**
 * Exhaustive search for a threshold certificate over integer weights in
 * 0..grid and thresholds in 1..n*grid (n <= 4). Incomplete by design: a
 * miss proves nothing, a hit is a valid certificate.
 */
std::optional<ThresholdCertificate> oracle_threshold_bruteforce(const SimplicialComplex& cx,
                                                                int grid);

}  // namespace minkcx
