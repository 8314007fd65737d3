/*
 * Lattice polytopes in V-representation and implicit Minkowski sums.
 *
 * A polytope is the convex hull of its stored generators; sums P_sigma are
 * never expanded. Membership in a sum is one joint feasibility LP over
 * convex-combination weights, which avoids the exponential vertex blowup of
 * explicit sums. Rational (not just integer) vertices are allowed so that
 * projected realizations stay representable; integrality is a separate
 * predicate used by the lattice-point side.
 */

#pragma once

#include "minkcx/linprog.hpp"
#include "minkcx/rational.hpp"
#include "minkcx/simplicial_complex.hpp"

#include <optional>
#include <vector>

namespace minkcx {

constexpr long long kDefaultCellBudget = 1'000'000;

struct LatticePolytope {
    int dim = 0;
    std::vector<RatVector> vertices;  // deduplicated, lex sorted

    bool operator==(const LatticePolytope& other) const = default;
};

/**
 * Normalize a generator list into a polytope. With require_origin the origin
 * must be a convex combination of the generators (checked exactly).
 */
LatticePolytope make_polytope(int dim, std::vector<RatVector> vertices,
                              bool require_origin = false);

/** Convenience: the box [0, t_1] x ... x [0, t_d] as its corner list. */
LatticePolytope make_box(const RatVector& sides);

bool is_lattice(const LatticePolytope& poly);

/** Exact convex-hull membership via one feasibility LP. */
bool contains(const LatticePolytope& poly, const RatVector& x);

/**
 * An ordered family (P_1,...,P_n) with a basepoint. Members are indexed
 * 1..n to match vertex labels of the associated complexes; index subsets
 * reuse the Subset bitmask type. The standing hypothesis 0 in P_i is
 * validated on construction unless disabled.
 */
struct PolytopeFamily {
    int dim = 0;
    std::vector<LatticePolytope> members;
    RatVector basepoint;

    int size() const { return static_cast<int>(members.size()); }
    Subset full_set() const {
        return members.empty() ? 0 : (Subset(1) << members.size()) - 1;
    }

    bool operator==(const PolytopeFamily& other) const = default;
};

PolytopeFamily make_family(int dim, std::vector<LatticePolytope> members,
                           RatVector basepoint, bool require_origin = true);

bool all_members_lattice(const PolytopeFamily& fam);

/** x in P_sigma = sum of the chosen members? P_empty = {0}. */
bool sum_contains(const PolytopeFamily& fam, Subset sigma, const RatVector& x);

/**
 * Like sum_contains but on success also returns, for every i in sigma, a
 * point y_i in P_i with sum y_i = x (the LP witness folded back).
 */
std::optional<std::vector<RatVector>> sum_witness(const PolytopeFamily& fam, Subset sigma,
                                                  const RatVector& x);

struct IntBox {
    std::vector<long long> lower, upper;  // componentwise, lower <= upper

    long long cell_count() const;
};

/** Componentwise floor/ceil bounding box of P_sigma; [0,0]^d for sigma empty. */
IntBox sum_bounding_box(const PolytopeFamily& fam, Subset sigma);

/**
 * All lattice points of P_sigma in lexicographic order, by sweeping the
 * bounding box and testing membership. Throws BudgetError when the box has
 * more than `cell_budget` cells.
 */
std::vector<RatVector> lattice_points(const PolytopeFamily& fam, Subset sigma,
                                      long long cell_budget = kDefaultCellBudget);

/**
 * Orthogonal rational coordinate frame of the hyperplane v-perp: deterministic
 * Gram-Schmidt over the projected standard basis, smallest index first, each
 * frame vector scaled to a primitive integer vector. Size d-1.
 */
std::vector<RatVector> projection_frame(int dim, const RatVector& v);

/** Coordinates of the orthogonal projection of p onto the span of the frame. */
RatVector project_point(const std::vector<RatVector>& frame, const RatVector& p);

/** Image of the polytope under orthogonal projection along v, in frame coordinates. */
LatticePolytope project_polytope(const LatticePolytope& poly, const RatVector& v);

}  // namespace minkcx
