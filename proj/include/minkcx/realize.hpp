/*
 * Constructive realizations of complexes as Minkowski complexes, and
 * dimension manipulation: the box construction, avoiding-line checks,
 * projection reduction, and discrete-set realizations.
 */

#pragma once

#include "minkcx/minkowski.hpp"
#include "minkcx/polytope.hpp"
#include "minkcx/simplicial_complex.hpp"

#include <cstdint>
#include <vector>

namespace minkcx {

/** Box realizations get unwieldy beyond this many facets (2^D corners each). */
constexpr int kMaxBoxFacets = 12;

/**
 * Equivalent to minkowski_complex(fam) == cx but checks only facets and
 * minimal nonfaces; sum monotonicity propagates the classification to every
 * other subset.
 */
bool family_realizes(const PolytopeFamily& fam, const SimplicialComplex& cx);

/**
 * The box construction: in R^D with one coordinate per facet, member i gets
 * side 1 in facet coordinates it belongs to and (facet size + 1) elsewhere;
 * the basepoint is (facet size + 1) per coordinate. The result is verified
 * to realize the complex before returning.
 */
PolytopeFamily realize_boxes(const SimplicialComplex& cx);

struct LineProbe {
    RatVector basepoint;
    RatVector direction;  // nonzero
};

/**
 * True iff the line through the probe basepoint misses P_sigma for every
 * face sigma of the complex (facets suffice by monotonicity).
 */
bool check_line_avoids(const PolytopeFamily& fam, const SimplicialComplex& cx,
                       const LineProbe& probe);

/**
 * Orthogonal projection of the whole family along the probe direction; the
 * projected family is verified to still realize the complex. Requires
 * check_line_avoids to hold.
 */
PolytopeFamily project_realization(const PolytopeFamily& fam, const SimplicialComplex& cx,
                                   const LineProbe& probe);

struct ReduceResult {
    PolytopeFamily family;
    std::vector<int> trajectory;  // ambient dimensions visited, first = input
};

/**
 * Best-effort dimension reduction: repeatedly search candidate directions
 * (coordinate axes, then differences of facet-sum vertex samples, then
 * seeded random directions, `budget` many per round) and project along the
 * first avoiding line found. Deterministic for a fixed seed. Failure to
 * reduce carries no meaning for ctd.
 */
ReduceResult reduce_dimension(const PolytopeFamily& fam, const SimplicialComplex& cx,
                              long long budget, std::uint64_t seed);

enum class LineVerdict { SameSide, Violation, NotApplicable };

/**
 * For faces sigma, tau with sigma union tau also a face, intersect the probe
 * line with P_sigma and P_tau exactly (two LPs each); SameSide iff both
 * parameter intervals lie strictly on one side of the basepoint. Violation
 * would contradict the join/line lemma and must never occur on valid input.
 */
LineVerdict check_lines_joins(const PolytopeFamily& fam, const SimplicialComplex& cx,
                              Subset sigma, Subset tau, const LineProbe& probe);

struct DiscreteFamily {
    int dim = 0;
    std::vector<std::vector<RatVector>> sets;  // each contains 0, lex sorted
    RatVector basepoint;

    bool operator==(const DiscreteFamily& other) const = default;
};

DiscreteFamily make_discrete_family(int dim, std::vector<std::vector<RatVector>> sets,
                                    RatVector basepoint);

/**
 * Shrink a realization to finite point sets: for every minimal nonface, an
 * exact decomposition of the basepoint over the summands is extracted from
 * the membership LP witness; the sets are those decomposition points plus 0.
 * The discrete family is verified to reproduce the complex.
 */
DiscreteFamily discrete_realization(const PolytopeFamily& fam, const SimplicialComplex& cx);

/**
 * The Minkowski complex of finite point sets, by exhaustive subset-sum
 * enumeration (budgeted on the number of sum tuples per subset).
 */
SimplicialComplex minkowski_complex_discrete(const DiscreteFamily& dfam,
                                             long long budget = kDefaultCellBudget);

}  // namespace minkcx
