#include "minkcx/realize.hpp"

#include "minkcx/errors.hpp"
#include "minkcx/linprog.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace minkcx {

namespace {

// splitmix64; fixed algorithm so seeded searches replay identically everywhere.
struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long long uniform(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// {t : basepoint + t * direction lies in P_sigma} via one feasibility LP with
// a free parameter variable; membership weights as in sum_contains.
LinearProgram line_membership_lp(const PolytopeFamily& fam, Subset sigma, const LineProbe& probe) {
    const auto chosen = subset_vertices(sigma);
    int total_vertices = 0;
    for (int i : chosen)
        total_vertices += static_cast<int>(fam.members[static_cast<std::size_t>(i - 1)].vertices.size());

    LinearProgram lp;
    lp.num_vars = total_vertices + 1;  // last variable is the line parameter t
    lp.bounds.resize(static_cast<std::size_t>(lp.num_vars));
    for (int j = 0; j < total_vertices; ++j) lp.bounds[static_cast<std::size_t>(j)].lower = Rational(0);

    int offset = 0;
    for (int i : chosen) {
        const auto& verts = fam.members[static_cast<std::size_t>(i - 1)].vertices;
        RatVector row(static_cast<std::size_t>(lp.num_vars), Rational(0));
        for (std::size_t j = 0; j < verts.size(); ++j)
            row[static_cast<std::size_t>(offset) + j] = 1;
        lp.add_constraint(std::move(row), Relation::Equal, Rational(1));
        offset += static_cast<int>(verts.size());
    }
    for (int c = 0; c < fam.dim; ++c) {
        RatVector row(static_cast<std::size_t>(lp.num_vars), Rational(0));
        int col = 0;
        for (int i : chosen) {
            const auto& verts = fam.members[static_cast<std::size_t>(i - 1)].vertices;
            for (std::size_t j = 0; j < verts.size(); ++j)
                row[static_cast<std::size_t>(col++)] = verts[j][static_cast<std::size_t>(c)];
        }
        row[static_cast<std::size_t>(total_vertices)] = -probe.direction[static_cast<std::size_t>(c)];
        lp.add_constraint(std::move(row), Relation::Equal, probe.basepoint[static_cast<std::size_t>(c)]);
    }
    return lp;
}

std::optional<std::pair<Rational, Rational>> line_interval(const PolytopeFamily& fam, Subset sigma,
                                                           const LineProbe& probe) {
    LinearProgram lp = line_membership_lp(fam, sigma, probe);
    RatVector t_coeff(static_cast<std::size_t>(lp.num_vars), Rational(0));
    t_coeff.back() = 1;
    lp.objective = Objective{t_coeff, Sense::Minimize};
    const LPResult lo = lp_solve(lp);
    if (lo.status == LPStatus::Infeasible) return std::nullopt;
    lp.objective->sense = Sense::Maximize;
    const LPResult hi = lp_solve(lp);
    if (lo.status != LPStatus::Optimal || hi.status != LPStatus::Optimal)
        throw VerificationError("line interval unbounded over a polytope");
    return std::make_pair(*lo.objective_value, *hi.objective_value);
}

void check_probe(const PolytopeFamily& fam, const LineProbe& probe) {
    if (probe.basepoint.size() != static_cast<std::size_t>(fam.dim) ||
        probe.direction.size() != static_cast<std::size_t>(fam.dim))
        throw std::invalid_argument("line probe dimension mismatch");
    if (vec_is_zero(probe.direction)) throw std::invalid_argument("line probe direction is zero");
    if (vec_compare(probe.basepoint, fam.basepoint) != 0)
        throw std::invalid_argument("line probe basepoint differs from family basepoint");
}

}  // namespace

bool family_realizes(const PolytopeFamily& fam, const SimplicialComplex& cx) {
    if (fam.size() != cx.n) return false;
    if (cx.is_void) return vec_is_zero(fam.basepoint);
    if (vec_is_zero(fam.basepoint)) return false;
    for (Subset f : cx.facets)
        if (sum_contains(fam, f, fam.basepoint)) return false;
    for (Subset nf : minimal_nonfaces(cx))
        if (!sum_contains(fam, nf, fam.basepoint)) return false;
    return true;
}

PolytopeFamily realize_boxes(const SimplicialComplex& cx) {
    if (cx.is_void) throw std::domain_error("realize_boxes: void complex");
    const int num_facets = static_cast<int>(cx.facets.size());
    if (num_facets > kMaxBoxFacets)
        throw BudgetError("realize_boxes: " + std::to_string(num_facets) +
                          " facets would give boxes with 2^" + std::to_string(num_facets) +
                          " corners (cap " + std::to_string(kMaxBoxFacets) + ")");

    RatVector mu(static_cast<std::size_t>(num_facets));
    for (int j = 0; j < num_facets; ++j)
        mu[static_cast<std::size_t>(j)] = subset_size(cx.facets[static_cast<std::size_t>(j)]) + 1;

    std::vector<LatticePolytope> members;
    for (int i = 1; i <= cx.n; ++i) {
        RatVector sides(static_cast<std::size_t>(num_facets));
        for (int j = 0; j < num_facets; ++j) {
            const Subset facet = cx.facets[static_cast<std::size_t>(j)];
            const bool inside = (facet & (Subset(1) << (i - 1))) != 0;
            sides[static_cast<std::size_t>(j)] =
                inside ? Rational(1) : Rational(subset_size(facet) + 1);
        }
        members.push_back(make_box(sides));
    }
    PolytopeFamily fam = make_family(num_facets, std::move(members), std::move(mu));
    if (!family_realizes(fam, cx))
        throw VerificationError("realize_boxes: construction does not realize the complex");
    return fam;
}

bool check_line_avoids(const PolytopeFamily& fam, const SimplicialComplex& cx,
                       const LineProbe& probe) {
    check_probe(fam, probe);
    if (cx.is_void) return true;
    for (Subset f : cx.facets) {
        if (f == 0) {
            // P_empty = {0}: the line hits it iff 0 = basepoint + t*direction solves.
            if (line_interval(fam, f, probe)) return false;
            continue;
        }
        const LPResult r = lp_feasible(line_membership_lp(fam, f, probe));
        if (r.status != LPStatus::Infeasible) return false;
    }
    return true;
}

PolytopeFamily project_realization(const PolytopeFamily& fam, const SimplicialComplex& cx,
                                   const LineProbe& probe) {
    if (!check_line_avoids(fam, cx, probe))
        throw std::invalid_argument("project_realization: line meets a face sum");
    const auto frame = projection_frame(fam.dim, probe.direction);
    std::vector<LatticePolytope> members;
    members.reserve(fam.members.size());
    for (const auto& p : fam.members) members.push_back(project_polytope(p, probe.direction));
    PolytopeFamily out{fam.dim - 1, std::move(members), project_point(frame, fam.basepoint)};
    if (!family_realizes(out, cx))
        throw VerificationError("project_realization: projected family changed the complex");
    return out;
}

namespace {

std::vector<RatVector> candidate_directions(const PolytopeFamily& fam,
                                            const SimplicialComplex& cx, long long budget,
                                            SplitMix& rng) {
    std::vector<RatVector> cands;
    auto push = [&](RatVector v) {
        if (vec_is_zero(v)) return;
        v = primitive_direction(v);
        if (std::find(cands.begin(), cands.end(), v) == cands.end()) cands.push_back(std::move(v));
    };
    for (int c = 0; c < fam.dim; ++c) {
        RatVector e = zero_vector(fam.dim);
        e[static_cast<std::size_t>(c)] = 1;
        push(std::move(e));
    }
    // Differences of sampled vertex sums of the facet polytopes.
    std::vector<RatVector> samples;
    for (Subset f : cx.facets) {
        if (static_cast<long long>(samples.size()) >= budget) break;
        std::vector<RatVector> sums{zero_vector(fam.dim)};
        for (int i : subset_vertices(f)) {
            std::vector<RatVector> next;
            for (const auto& base : sums) {
                for (const auto& v : fam.members[static_cast<std::size_t>(i - 1)].vertices) {
                    next.push_back(vec_add(base, v));
                    if (static_cast<long long>(next.size()) > budget) break;
                }
                if (static_cast<long long>(next.size()) > budget) break;
            }
            sums = std::move(next);
        }
        for (auto& s : sums) {
            samples.push_back(std::move(s));
            if (static_cast<long long>(samples.size()) >= budget) break;
        }
    }
    for (std::size_t a = 0; a < samples.size(); ++a) {
        for (std::size_t b = a + 1; b < samples.size(); ++b) {
            if (static_cast<long long>(cands.size()) >= budget + fam.dim) break;
            RatVector d = vec_sub(samples[a], samples[b]);
            if (!vec_is_zero(d)) push(std::move(d));
        }
        if (static_cast<long long>(cands.size()) >= budget + fam.dim) break;
    }
    for (long long k = 0; k < budget; ++k) {
        RatVector v(static_cast<std::size_t>(fam.dim));
        bool zero = true;
        for (auto& c : v) {
            c = rng.uniform(-3, 3);
            if (c != 0) zero = false;
        }
        if (!zero) push(std::move(v));
    }
    return cands;
}

}  // namespace

ReduceResult reduce_dimension(const PolytopeFamily& fam, const SimplicialComplex& cx,
                              long long budget, std::uint64_t seed) {
    if (!family_realizes(fam, cx))
        throw std::invalid_argument("reduce_dimension: family does not realize the complex");
    ReduceResult result{fam, {fam.dim}};
    SplitMix rng{seed ^ 0x5bd1e995u};
    bool progress = true;
    while (progress && result.family.dim >= 1) {
        progress = false;
        for (const auto& dir : candidate_directions(result.family, cx, budget, rng)) {
            const LineProbe probe{result.family.basepoint, dir};
            if (!check_line_avoids(result.family, cx, probe)) continue;
            result.family = project_realization(result.family, cx, probe);
            result.trajectory.push_back(result.family.dim);
            progress = true;
            break;
        }
    }
    return result;
}

LineVerdict check_lines_joins(const PolytopeFamily& fam, const SimplicialComplex& cx,
                              Subset sigma, Subset tau, const LineProbe& probe) {
    check_probe(fam, probe);
    if (!member(cx, sigma) || !member(cx, tau))
        throw std::invalid_argument("check_lines_joins: sigma and tau must be faces");
    if (!member(cx, sigma | tau)) return LineVerdict::NotApplicable;
    const auto int_sigma = line_interval(fam, sigma, probe);
    const auto int_tau = line_interval(fam, tau, probe);
    if (!int_sigma || !int_tau) return LineVerdict::NotApplicable;
    // 0 cannot lie in either interval: the basepoint avoids face sums.
    const bool sigma_pos = int_sigma->first > 0;
    const bool tau_pos = int_tau->first > 0;
    const bool sigma_neg = int_sigma->second < 0;
    const bool tau_neg = int_tau->second < 0;
    if ((sigma_pos && tau_pos) || (sigma_neg && tau_neg)) return LineVerdict::SameSide;
    return LineVerdict::Violation;
}

DiscreteFamily make_discrete_family(int dim, std::vector<std::vector<RatVector>> sets,
                                    RatVector basepoint) {
    if (basepoint.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("discrete family: basepoint dimension mismatch");
    for (auto& s : sets) {
        for (const auto& p : s)
            if (p.size() != static_cast<std::size_t>(dim))
                throw std::invalid_argument("discrete family: point dimension mismatch");
        std::sort(s.begin(), s.end(),
                  [](const RatVector& a, const RatVector& b) { return vec_compare(a, b) < 0; });
        s.erase(std::unique(s.begin(), s.end()), s.end());
        const RatVector zero = zero_vector(dim);
        if (!std::binary_search(s.begin(), s.end(), zero,
                                [](const RatVector& a, const RatVector& b) { return vec_compare(a, b) < 0; }))
            throw std::invalid_argument("discrete family: set does not contain the origin");
    }
    return {dim, std::move(sets), std::move(basepoint)};
}

DiscreteFamily discrete_realization(const PolytopeFamily& fam, const SimplicialComplex& cx) {
    if (!family_realizes(fam, cx))
        throw std::invalid_argument("discrete_realization: family does not realize the complex");
    std::vector<std::vector<RatVector>> sets(static_cast<std::size_t>(fam.size()));
    for (auto& s : sets) s.push_back(zero_vector(fam.dim));
    if (!cx.is_void) {
        for (Subset nf : minimal_nonfaces(cx)) {
            const auto witness = sum_witness(fam, nf, fam.basepoint);
            if (!witness)
                throw VerificationError("discrete_realization: nonface sum lost the basepoint");
            const auto verts = subset_vertices(nf);
            for (std::size_t k = 0; k < verts.size(); ++k)
                sets[static_cast<std::size_t>(verts[k] - 1)].push_back((*witness)[k]);
        }
    }
    DiscreteFamily out = make_discrete_family(fam.dim, std::move(sets), fam.basepoint);
    if (minkowski_complex_discrete(out) != cx)
        throw VerificationError("discrete_realization: discrete family changed the complex");
    return out;
}

namespace {

bool sums_hit(const std::vector<const std::vector<RatVector>*>& sets, const RatVector& target,
              long long& budget) {
    // DFS over the sum tuples with early exit on a hit.
    const RatVector zero = zero_vector(static_cast<int>(target.size()));
    auto rec = [&](auto&& self, std::size_t idx, const RatVector& acc) -> bool {
        if (idx == sets.size()) {
            if (--budget < 0) throw BudgetError("subset-sum enumeration exceeded its budget");
            return vec_compare(acc, target) == 0;
        }
        for (const auto& p : *sets[idx])
            if (self(self, idx + 1, vec_add(acc, p))) return true;
        return false;
    };
    return rec(rec, 0, zero);
}

}  // namespace

SimplicialComplex minkowski_complex_discrete(const DiscreteFamily& dfam, long long budget) {
    const int n = static_cast<int>(dfam.sets.size());
    if (n > kMaxVertices) throw std::invalid_argument("minkowski_complex_discrete: too many sets");
    if (vec_is_zero(dfam.basepoint)) return void_complex(n);

    std::vector<Subset> by_size_desc;
    const std::uint64_t limit = std::uint64_t(1) << n;
    for (std::uint64_t s = 0; s < limit; ++s) by_size_desc.push_back(Subset(s));
    std::sort(by_size_desc.begin(), by_size_desc.end(), [](Subset a, Subset b) {
        const int pa = subset_size(a), pb = subset_size(b);
        return pa != pb ? pa > pb : a < b;
    });

    long long remaining = budget;
    std::vector<Subset> facets;
    for (Subset sigma : by_size_desc) {
        bool known = false;
        for (Subset f : facets)
            if ((sigma & f) == sigma) { known = true; break; }
        if (known) continue;
        std::vector<const std::vector<RatVector>*> chosen;
        for (int i : subset_vertices(sigma)) chosen.push_back(&dfam.sets[static_cast<std::size_t>(i - 1)]);
        if (!sums_hit(chosen, dfam.basepoint, remaining)) facets.push_back(sigma);
    }
    return from_facet_masks(n, facets);
}

}  // namespace minkcx
