/*
 * Threshold recognition, forbidden-configuration witnesses, and bounds for
 * the convex threshold dimension.
 */

#pragma once

#include "minkcx/polytope.hpp"
#include "minkcx/realize.hpp"
#include "minkcx/simplicial_complex.hpp"

#include <optional>
#include <vector>

namespace minkcx {

struct ThresholdCertificate {
    std::vector<Rational> weights;  // 0 <= weight <= threshold
    Rational threshold;
};

/**
 * The complex of subsets whose weight sum is strictly below the threshold.
 * Weights must satisfy 0 <= w_i <= threshold.
 */
SimplicialComplex threshold_complex(const std::vector<Rational>& weights,
                                    const Rational& threshold);

/**
 * Exact recognition: normalize the threshold to 1 and maximize a common
 * slack below the facet sums subject to minimal-nonface sums reaching 1; a
 * strictly positive optimal slack is the certificate. Every returned
 * certificate has been re-verified by regenerating the complex.
 */
std::optional<ThresholdCertificate> recognize_threshold(const SimplicialComplex& cx);

enum class ForbiddenShape { TwoK2, P4, C4 };

/**
 * Four distinct vertices with edges {a,b}, {c,d} in the complex and the
 * crossing pairs {a,c}, {b,d} not in it; equivalently an induced 2K2, P4 or
 * C4 in the 1-skeleton.
 */
struct ForbiddenWitness {
    int a = 0, b = 0, c = 0, d = 0;
    ForbiddenShape shape = ForbiddenShape::TwoK2;
};

std::string to_string(const ForbiddenWitness& w);

/** Lexicographically first forbidden quadruple, if any. */
std::optional<ForbiddenWitness> find_forbidden(const SimplicialComplex& cx);

enum class BaseKind { Empty, Threshold, NonThreshold };

struct GroupEvidence {
    Subset vertices = 0;       // original vertex labels
    ForbiddenWitness witness;  // original vertex labels
};

struct LowerEvidence {
    std::vector<GroupEvidence> groups;  // each contributes +1 via the join theorem
    Subset base_vertices = 0;           // leftover blocks plus cone vertices
    BaseKind base_kind = BaseKind::Empty;
    std::optional<ThresholdCertificate> base_certificate;
    Subset phantom_vertices = 0;  // vertices that are not faces; ctd-neutral
    bool heuristic = false;       // grouping search was truncated
};

/**
 * Sound lower bound: split the join decomposition blocks into groups each
 * carrying a forbidden witness (k of them) plus a base part; the bound is
 * base + k where base is 0 / 1 / 2 for an empty / threshold / non-threshold
 * base (an empty base with k groups still yields k + 1, the first group
 * being non-threshold). Exhaustive over block partitions up to 10 blocks,
 * greedy beyond (flagged).
 */
std::pair<int, LowerEvidence> ctd_lower_bound(const SimplicialComplex& cx);

struct UpperEvidence {
    PolytopeFamily family;
    std::vector<int> trajectory;  // dimensions visited during reduction
    bool via_threshold = false;
};

/**
 * Verified upper bound: the segment realization when the complex is
 * threshold, otherwise the box construction followed by best-effort
 * projection reduction. The returned family always realizes the complex.
 */
std::pair<int, UpperEvidence> ctd_upper_bound(const SimplicialComplex& cx, long long budget,
                                              std::uint64_t seed);

struct CtdBounds {
    int lower = 0;
    int upper = 0;
    LowerEvidence lower_evidence;
    UpperEvidence upper_evidence;
};

CtdBounds ctd_bounds(const SimplicialComplex& cx, long long budget, std::uint64_t seed);

}  // namespace minkcx
