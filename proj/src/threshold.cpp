#include "minkcx/threshold.hpp"

#include "minkcx/errors.hpp"
#include "minkcx/linprog.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace minkcx {

SimplicialComplex threshold_complex(const std::vector<Rational>& weights,
                                    const Rational& threshold) {
    const int n = static_cast<int>(weights.size());
    if (n > kMaxVertices) throw std::invalid_argument("threshold_complex: too many weights");
    for (const auto& w : weights)
        if (w < 0 || w > threshold)
            throw std::out_of_range("threshold_complex: weight outside [0, threshold]");

    const std::uint64_t limit = std::uint64_t(1) << n;
    std::vector<Rational> sums(static_cast<std::size_t>(limit), Rational(0));
    std::vector<bool> face(static_cast<std::size_t>(limit));
    for (std::uint64_t s = 0; s < limit; ++s) {
        if (s) {
            const std::uint64_t low = s & (~s + 1);
            sums[s] = sums[s ^ low] + weights[static_cast<std::size_t>(std::countr_zero(low))];
        }
        face[s] = sums[s] < threshold;
    }
    if (!face[0]) return void_complex(n);  // threshold <= 0
    std::vector<Subset> facets;
    for (std::uint64_t s = 0; s < limit; ++s) {
        if (!face[s]) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!(s & (std::uint64_t(1) << v)) && face[s | (std::uint64_t(1) << v)]) maximal = false;
        if (maximal) facets.push_back(Subset(s));
    }
    return from_facet_masks(n, facets);
}

std::optional<ThresholdCertificate> recognize_threshold(const SimplicialComplex& cx) {
    if (cx.is_void) throw std::domain_error("recognize_threshold: void complex");
    const int n = cx.n;

    // Variables: weights 1..n in [0,1], plus the slack delta (free).
    LinearProgram lp;
    lp.num_vars = n + 1;
    lp.bounds.resize(static_cast<std::size_t>(n + 1));
    for (int i = 0; i < n; ++i) {
        lp.bounds[static_cast<std::size_t>(i)].lower = Rational(0);
        lp.bounds[static_cast<std::size_t>(i)].upper = Rational(1);
    }
    for (Subset facet : cx.facets) {
        RatVector row(static_cast<std::size_t>(n + 1), Rational(0));
        for (int v : subset_vertices(facet)) row[static_cast<std::size_t>(v - 1)] = 1;
        row[static_cast<std::size_t>(n)] = 1;  // sum + delta <= 1
        lp.add_constraint(std::move(row), Relation::LessEq, Rational(1));
    }
    for (Subset nonface : minimal_nonfaces(cx)) {
        RatVector row(static_cast<std::size_t>(n + 1), Rational(0));
        for (int v : subset_vertices(nonface)) row[static_cast<std::size_t>(v - 1)] = 1;
        lp.add_constraint(std::move(row), Relation::GreaterEq, Rational(1));
    }
    RatVector objective(static_cast<std::size_t>(n + 1), Rational(0));
    objective[static_cast<std::size_t>(n)] = 1;
    lp.objective = Objective{std::move(objective), Sense::Maximize};

    const LPResult result = lp_solve(lp);
    if (result.status != LPStatus::Optimal || *result.objective_value <= 0) return std::nullopt;

    ThresholdCertificate cert;
    cert.threshold = 1;
    cert.weights.assign(result.witness->begin(), result.witness->end() - 1);
    if (threshold_complex(cert.weights, cert.threshold) != cx)
        throw VerificationError("recognize_threshold: certificate does not regenerate the complex");
    return cert;
}

std::string to_string(const ForbiddenWitness& w) {
    const char* shape = w.shape == ForbiddenShape::TwoK2 ? "2K2"
                        : w.shape == ForbiddenShape::P4  ? "P4"
                                                         : "C4";
    return std::string("edges {") + std::to_string(w.a) + "," + std::to_string(w.b) + "} {" +
           std::to_string(w.c) + "," + std::to_string(w.d) + "}, nonedges {" +
           std::to_string(w.a) + "," + std::to_string(w.c) + "} {" + std::to_string(w.b) + "," +
           std::to_string(w.d) + "}, shape " + shape;
}

namespace {

// Pair-face table; the forbidden-quadruple scan only needs 2-element faces.
std::vector<std::vector<bool>> pair_faces(const SimplicialComplex& cx) {
    std::vector<std::vector<bool>> table(static_cast<std::size_t>(cx.n + 1),
                                         std::vector<bool>(static_cast<std::size_t>(cx.n + 1), false));
    for (int u = 1; u <= cx.n; ++u)
        for (int v = u + 1; v <= cx.n; ++v) {
            const Subset pair = (Subset(1) << (u - 1)) | (Subset(1) << (v - 1));
            const bool f = member(cx, pair);
            table[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = f;
            table[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = f;
        }
    return table;
}

std::optional<ForbiddenWitness> find_forbidden_in(const std::vector<std::vector<bool>>& edge,
                                                  const std::vector<int>& verts) {
    for (int a : verts)
        for (int b : verts)
            for (int c : verts)
                for (int d : verts) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (!edge[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
                    if (!edge[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)]) continue;
                    if (edge[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]) continue;
                    if (edge[static_cast<std::size_t>(b)][static_cast<std::size_t>(d)]) continue;
                    ForbiddenWitness w{a, b, c, d, ForbiddenShape::TwoK2};
                    const bool ad = edge[static_cast<std::size_t>(a)][static_cast<std::size_t>(d)];
                    const bool bc = edge[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
                    w.shape = (ad && bc) ? ForbiddenShape::C4
                              : (ad || bc) ? ForbiddenShape::P4
                                           : ForbiddenShape::TwoK2;
                    return w;
                }
    return std::nullopt;
}

}  // namespace

std::optional<ForbiddenWitness> find_forbidden(const SimplicialComplex& cx) {
    if (cx.is_void) return std::nullopt;
    std::vector<int> verts(static_cast<std::size_t>(cx.n));
    for (int v = 1; v <= cx.n; ++v) verts[static_cast<std::size_t>(v - 1)] = v;
    return find_forbidden_in(pair_faces(cx), verts);
}

namespace {

constexpr int kExhaustiveBlockCap = 10;

struct GroupSearch {
    std::vector<Subset> blocks;
    std::vector<std::vector<bool>> edge;  // pair-face table of the full complex

    Subset block_union(Subset block_mask) const {
        Subset u = 0;
        for (std::size_t b = 0; b < blocks.size(); ++b)
            if (block_mask & (Subset(1) << b)) u |= blocks[b];
        return u;
    }

    std::optional<ForbiddenWitness> witness_for(Subset block_mask) const {
        return find_forbidden_in(edge, subset_vertices_of(block_union(block_mask)));
    }

    static std::vector<int> subset_vertices_of(Subset s) { return subset_vertices(s); }
};

}  // namespace

std::pair<int, LowerEvidence> ctd_lower_bound(const SimplicialComplex& cx) {
    if (cx.is_void) throw std::domain_error("ctd_lower_bound: void complex");

    // Vertices that are not faces never change ctd: a segment from 0 to the
    // basepoint extends any realization of the rest. Strip them first so the
    // join decomposition's precondition holds.
    Subset face_vertices = 0;
    for (int v = 1; v <= cx.n; ++v)
        if (member(cx, Subset(1) << (v - 1))) face_vertices |= Subset(1) << (v - 1);
    LowerEvidence evidence;
    const Subset all = cx.n == 0 ? 0 : (Subset(1) << cx.n) - 1;
    evidence.phantom_vertices = all & ~face_vertices;

    const SimplicialComplex core = induced_subcomplex(cx, face_vertices);
    const auto core_labels = subset_vertices(face_vertices);
    auto to_original = [&](Subset core_mask) {
        Subset out = 0;
        for (int v : subset_vertices(core_mask))
            out |= Subset(1) << (core_labels[static_cast<std::size_t>(v - 1)] - 1);
        return out;
    };

    if (core.n == 0) {
        evidence.base_kind = BaseKind::Empty;
        return {0, evidence};
    }

    const JoinDecomposition decomp = join_decomposition(core);
    GroupSearch search{decomp.blocks, pair_faces(core)};
    const int num_blocks = static_cast<int>(decomp.blocks.size());

    // witness table and max-group-count DP over block subsets
    std::vector<std::optional<ForbiddenWitness>> witness;
    std::vector<int> max_groups;
    Subset considered_blocks = num_blocks == 0 ? 0 : (Subset(1) << num_blocks) - 1;
    evidence.heuristic = false;
    if (num_blocks > kExhaustiveBlockCap) {
        // Greedy: repeatedly find the smallest block subset (by size then
        // mask, capped at pairs) carrying a witness and split it off.
        evidence.heuristic = true;
        Subset remaining = considered_blocks;
        std::vector<std::pair<Subset, ForbiddenWitness>> groups;
        bool progress = true;
        while (progress) {
            progress = false;
            for (int size = 1; size <= 2 && !progress; ++size) {
                const auto rem = subset_vertices(remaining);  // 1-based block ids
                if (size == 1) {
                    for (int b : rem) {
                        const Subset mask = Subset(1) << (b - 1);
                        if (auto w = search.witness_for(mask)) {
                            groups.emplace_back(mask, *w);
                            remaining &= ~mask;
                            progress = true;
                            break;
                        }
                    }
                } else {
                    for (std::size_t i = 0; i < rem.size() && !progress; ++i)
                        for (std::size_t j = i + 1; j < rem.size() && !progress; ++j) {
                            const Subset mask =
                                (Subset(1) << (rem[i] - 1)) | (Subset(1) << (rem[j] - 1));
                            if (auto w = search.witness_for(mask)) {
                                groups.emplace_back(mask, *w);
                                remaining &= ~mask;
                                progress = true;
                            }
                        }
                }
            }
        }
        // Evaluate the single greedy partition.
        const int k = static_cast<int>(groups.size());
        Subset base_core = decomp.cone_vertices;
        for (int b : subset_vertices(remaining)) base_core |= decomp.blocks[static_cast<std::size_t>(b - 1)];
        int base;
        if (base_core == 0) {
            base = 0;
        } else {
            const SimplicialComplex base_cx = induced_subcomplex(core, base_core);
            evidence.base_certificate = recognize_threshold(base_cx);
            base = evidence.base_certificate ? 1 : 2;
        }
        int bound = base + k;
        if (base == 0 && k >= 1) bound = k + 1;
        evidence.base_kind = base == 0 ? BaseKind::Empty
                             : base == 1 ? BaseKind::Threshold
                                         : BaseKind::NonThreshold;
        evidence.base_vertices = to_original(base_core);
        auto relabel = [&](ForbiddenWitness w) {
            w.a = core_labels[static_cast<std::size_t>(w.a - 1)];
            w.b = core_labels[static_cast<std::size_t>(w.b - 1)];
            w.c = core_labels[static_cast<std::size_t>(w.c - 1)];
            w.d = core_labels[static_cast<std::size_t>(w.d - 1)];
            return w;
        };
        for (const auto& [mask, w] : groups)
            evidence.groups.push_back({to_original(search.block_union(mask)), relabel(w)});
        return {bound, evidence};
    }

    witness.resize(std::size_t(1) << num_blocks);
    max_groups.assign(std::size_t(1) << num_blocks, -1);
    max_groups[0] = 0;
    for (Subset s = 1; s < (Subset(1) << num_blocks); ++s) {
        witness[s] = search.witness_for(s);
        // best exact partition of s into witness-carrying groups
        for (Subset t = s; t; t = (t - 1) & s) {
            if (!witness[t]) continue;
            if (max_groups[s ^ t] < 0) continue;
            max_groups[s] = std::max(max_groups[s], max_groups[s ^ t] + 1);
        }
    }

    int best = -1;
    int best_k = -1;
    Subset best_parted = 0;
    BaseKind best_kind = BaseKind::Empty;
    std::optional<ThresholdCertificate> best_cert;
    for (Subset parted = 0; parted <= considered_blocks; ++parted) {
        if (num_blocks == 0 && parted > 0) break;
        const int k = max_groups[parted];
        if (k < 0) continue;
        Subset base_core = decomp.cone_vertices;
        for (int b = 0; b < num_blocks; ++b)
            if (!(parted & (Subset(1) << b))) base_core |= decomp.blocks[static_cast<std::size_t>(b)];
        int base;
        std::optional<ThresholdCertificate> cert;
        BaseKind kind;
        if (base_core == 0) {
            base = 0;
            kind = BaseKind::Empty;
        } else {
            cert = recognize_threshold(induced_subcomplex(core, base_core));
            base = cert ? 1 : 2;
            kind = cert ? BaseKind::Threshold : BaseKind::NonThreshold;
        }
        int bound = base + k;
        if (base == 0 && k >= 1) bound = k + 1;
        // Ties prefer groupings with more witnesses; evidence is richer.
        if (bound > best || (bound == best && k > best_k)) {
            best = bound;
            best_k = k;
            best_parted = parted;
            best_kind = kind;
            best_cert = cert;
        }
        if (considered_blocks == 0) break;
    }

    // Reconstruct one optimal grouping for the winning partitioned set.
    evidence.base_kind = best_kind;
    evidence.base_certificate = best_cert;
    Subset base_core = decomp.cone_vertices;
    for (int b = 0; b < num_blocks; ++b)
        if (!(best_parted & (Subset(1) << b))) base_core |= decomp.blocks[static_cast<std::size_t>(b)];
    evidence.base_vertices = to_original(base_core);
    auto relabel = [&](ForbiddenWitness w) {
        w.a = core_labels[static_cast<std::size_t>(w.a - 1)];
        w.b = core_labels[static_cast<std::size_t>(w.b - 1)];
        w.c = core_labels[static_cast<std::size_t>(w.c - 1)];
        w.d = core_labels[static_cast<std::size_t>(w.d - 1)];
        return w;
    };
    Subset left = best_parted;
    while (left) {
        Subset pick = 0;
        for (Subset t = left; t; t = (t - 1) & left)
            if (witness[t] && max_groups[left ^ t] == max_groups[left] - 1) {
                if (pick == 0 || t < pick) pick = t;
            }
        evidence.groups.push_back({to_original(search.block_union(pick)), relabel(*witness[pick])});
        left ^= pick;
    }
    return {best, evidence};
}

std::pair<int, UpperEvidence> ctd_upper_bound(const SimplicialComplex& cx, long long budget,
                                              std::uint64_t seed) {
    if (cx.is_void) throw std::domain_error("ctd_upper_bound: void complex");
    if (auto cert = recognize_threshold(cx)) {
        std::vector<LatticePolytope> members;
        for (const auto& w : cert->weights) {
            std::vector<RatVector> verts{{Rational(0)}, {w}};
            members.push_back(make_polytope(1, std::move(verts)));
        }
        PolytopeFamily fam = make_family(1, std::move(members), {cert->threshold});
        if (!family_realizes(fam, cx))
            throw VerificationError("ctd_upper_bound: segment realization failed");
        return {1, UpperEvidence{std::move(fam), {1}, true}};
    }
    PolytopeFamily boxes = realize_boxes(cx);
    ReduceResult reduced = reduce_dimension(boxes, cx, budget, seed);
    const int dim = reduced.family.dim;
    return {dim, UpperEvidence{std::move(reduced.family), std::move(reduced.trajectory), false}};
}

CtdBounds ctd_bounds(const SimplicialComplex& cx, long long budget, std::uint64_t seed) {
    CtdBounds out;
    auto [lo, lo_ev] = ctd_lower_bound(cx);
    auto [hi, hi_ev] = ctd_upper_bound(cx, budget, seed);
    out.lower = lo;
    out.upper = hi;
    out.lower_evidence = std::move(lo_ev);
    out.upper_evidence = std::move(hi_ev);
    if (out.lower > out.upper)
        throw VerificationError("ctd bounds crossed: lower " + std::to_string(out.lower) +
                                " > upper " + std::to_string(out.upper));
    return out;
}

}  // namespace minkcx
