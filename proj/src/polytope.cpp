#include "minkcx/polytope.hpp"

#include "minkcx/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace minkcx {

namespace {

// weights lambda_{ij} >= 0, one group per chosen member: sum_j lambda_{ij} = 1
// per group, sum_{ij} lambda_{ij} v_{ij} = x. Group row order follows sigma.
LinearProgram membership_lp(const PolytopeFamily& fam, Subset sigma, const RatVector& x) {
    const auto chosen = subset_vertices(sigma);
    int total_vertices = 0;
    for (int i : chosen)
        total_vertices += static_cast<int>(fam.members[static_cast<std::size_t>(i - 1)].vertices.size());

    LinearProgram lp;
    lp.num_vars = total_vertices;
    lp.bounds.resize(static_cast<std::size_t>(total_vertices));
    for (auto& b : lp.bounds) b.lower = Rational(0);

    int offset = 0;
    for (int i : chosen) {
        const auto& verts = fam.members[static_cast<std::size_t>(i - 1)].vertices;
        RatVector row(static_cast<std::size_t>(total_vertices), Rational(0));
        for (std::size_t j = 0; j < verts.size(); ++j)
            row[static_cast<std::size_t>(offset) + j] = 1;
        lp.add_constraint(std::move(row), Relation::Equal, Rational(1));
        offset += static_cast<int>(verts.size());
    }
    for (int c = 0; c < fam.dim; ++c) {
        RatVector row(static_cast<std::size_t>(total_vertices), Rational(0));
        int col = 0;
        for (int i : chosen) {
            const auto& verts = fam.members[static_cast<std::size_t>(i - 1)].vertices;
            for (std::size_t j = 0; j < verts.size(); ++j)
                row[static_cast<std::size_t>(col++)] = verts[j][static_cast<std::size_t>(c)];
        }
        lp.add_constraint(std::move(row), Relation::Equal, x[static_cast<std::size_t>(c)]);
    }
    return lp;
}

void check_sigma(const PolytopeFamily& fam, Subset sigma) {
    if ((sigma & ~fam.full_set()) != 0)
        throw std::out_of_range("member index out of range in subset " + subset_to_string(sigma));
}

}  // namespace

LatticePolytope make_polytope(int dim, std::vector<RatVector> vertices, bool require_origin) {
    if (dim < 0) throw std::invalid_argument("make_polytope: negative dimension");
    if (vertices.empty()) throw std::invalid_argument("make_polytope: empty vertex list");
    for (const auto& v : vertices)
        if (v.size() != static_cast<std::size_t>(dim))
            throw std::invalid_argument("make_polytope: vertex dimension mismatch");
    std::sort(vertices.begin(), vertices.end(),
              [](const RatVector& a, const RatVector& b) { return vec_compare(a, b) < 0; });
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    LatticePolytope poly{dim, std::move(vertices)};
    if (require_origin && !contains(poly, zero_vector(dim)))
        throw std::invalid_argument("make_polytope: polytope does not contain the origin");
    return poly;
}

LatticePolytope make_box(const RatVector& sides) {
    for (const auto& t : sides)
        if (t < 0) throw std::invalid_argument("make_box: negative side");
    const int d = static_cast<int>(sides.size());
    std::vector<RatVector> corners;
    corners.reserve(std::size_t(1) << d);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << d); ++mask) {
        RatVector corner(static_cast<std::size_t>(d), Rational(0));
        for (int j = 0; j < d; ++j)
            if (mask & (std::uint64_t(1) << j)) corner[static_cast<std::size_t>(j)] = sides[static_cast<std::size_t>(j)];
        corners.push_back(std::move(corner));
    }
    return make_polytope(d, std::move(corners));
}

bool is_lattice(const LatticePolytope& poly) {
    for (const auto& v : poly.vertices)
        for (const auto& c : v)
            if (!is_integral(c)) return false;
    return true;
}

bool contains(const LatticePolytope& poly, const RatVector& x) {
    if (x.size() != static_cast<std::size_t>(poly.dim))
        throw std::invalid_argument("contains: point dimension mismatch");
    PolytopeFamily single{poly.dim, {poly}, zero_vector(poly.dim)};
    return lp_feasible(membership_lp(single, Subset(1), x)).status != LPStatus::Infeasible;
}

PolytopeFamily make_family(int dim, std::vector<LatticePolytope> members, RatVector basepoint,
                           bool require_origin) {
    if (members.size() > static_cast<std::size_t>(kMaxVertices))
        throw std::invalid_argument("make_family: too many members");
    for (const auto& p : members)
        if (p.dim != dim) throw std::invalid_argument("make_family: member dimension mismatch");
    if (basepoint.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("make_family: basepoint dimension mismatch");
    if (require_origin) {
        for (std::size_t i = 0; i < members.size(); ++i)
            if (!contains(members[i], zero_vector(dim)))
                throw std::invalid_argument("make_family: member " + std::to_string(i + 1) +
                                            " does not contain the origin");
    }
    return {dim, std::move(members), std::move(basepoint)};
}

bool all_members_lattice(const PolytopeFamily& fam) {
    for (const auto& p : fam.members)
        if (!is_lattice(p)) return false;
    return true;
}

bool sum_contains(const PolytopeFamily& fam, Subset sigma, const RatVector& x) {
    check_sigma(fam, sigma);
    if (x.size() != static_cast<std::size_t>(fam.dim))
        throw std::invalid_argument("sum_contains: point dimension mismatch");
    if (sigma == 0) return vec_is_zero(x);  // P_empty = {0}
    return lp_feasible(membership_lp(fam, sigma, x)).status != LPStatus::Infeasible;
}

std::optional<std::vector<RatVector>> sum_witness(const PolytopeFamily& fam, Subset sigma,
                                                  const RatVector& x) {
    check_sigma(fam, sigma);
    if (sigma == 0) {
        if (vec_is_zero(x)) return std::vector<RatVector>{};
        return std::nullopt;
    }
    const auto result = lp_feasible(membership_lp(fam, sigma, x));
    if (result.status == LPStatus::Infeasible) return std::nullopt;
    const RatVector& lambda = *result.witness;
    std::vector<RatVector> points;
    std::size_t col = 0;
    for (int i : subset_vertices(sigma)) {
        const auto& verts = fam.members[static_cast<std::size_t>(i - 1)].vertices;
        RatVector y = zero_vector(fam.dim);
        for (const auto& v : verts) {
            if (lambda[col] != 0) y = vec_add(y, vec_scale(lambda[col], v));
            ++col;
        }
        points.push_back(std::move(y));
    }
    return points;
}

long long IntBox::cell_count() const {
    long long cells = 1;
    for (std::size_t j = 0; j < lower.size(); ++j) {
        const long long span = upper[j] - lower[j] + 1;
        if (cells > (1LL << 62) / span) return 1LL << 62;  // saturate
        cells *= span;
    }
    return cells;
}

IntBox sum_bounding_box(const PolytopeFamily& fam, Subset sigma) {
    check_sigma(fam, sigma);
    IntBox box{std::vector<long long>(static_cast<std::size_t>(fam.dim), 0),
               std::vector<long long>(static_cast<std::size_t>(fam.dim), 0)};
    for (int i : subset_vertices(sigma)) {
        const auto& verts = fam.members[static_cast<std::size_t>(i - 1)].vertices;
        for (int c = 0; c < fam.dim; ++c) {
            Rational lo = verts[0][static_cast<std::size_t>(c)];
            Rational hi = lo;
            for (const auto& v : verts) {
                lo = std::min(lo, v[static_cast<std::size_t>(c)]);
                hi = std::max(hi, v[static_cast<std::size_t>(c)]);
            }
            box.lower[static_cast<std::size_t>(c)] += static_cast<long long>(floor_int(lo));
            box.upper[static_cast<std::size_t>(c)] += static_cast<long long>(ceil_int(hi));
        }
    }
    return box;
}

std::vector<RatVector> lattice_points(const PolytopeFamily& fam, Subset sigma,
                                      long long cell_budget) {
    const IntBox box = sum_bounding_box(fam, sigma);
    const long long cells = box.cell_count();
    if (cells > cell_budget) {
        std::string dims;
        for (std::size_t j = 0; j < box.lower.size(); ++j) {
            if (j) dims += " x ";
            dims += "[" + std::to_string(box.lower[j]) + "," + std::to_string(box.upper[j]) + "]";
        }
        throw BudgetError("lattice enumeration box " + dims + " has " + std::to_string(cells) +
                          " cells, budget " + std::to_string(cell_budget));
    }
    std::vector<RatVector> points;
    std::vector<long long> cursor = box.lower;
    for (long long step = 0; step < cells; ++step) {
        RatVector x(static_cast<std::size_t>(fam.dim));
        for (std::size_t j = 0; j < cursor.size(); ++j) x[j] = cursor[j];
        if (sum_contains(fam, sigma, x)) points.push_back(std::move(x));
        // lexicographic increment, last coordinate fastest
        for (std::size_t j = cursor.size(); j-- > 0;) {
            if (++cursor[j] <= box.upper[j]) break;
            cursor[j] = box.lower[j];
        }
    }
    return points;
}

std::vector<RatVector> projection_frame(int dim, const RatVector& v) {
    if (v.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("projection_frame: direction dimension mismatch");
    if (vec_is_zero(v)) throw std::invalid_argument("projection_frame: zero direction");
    const Rational vv = vec_dot(v, v);
    std::vector<RatVector> frame;
    for (int i = 0; i < dim && static_cast<int>(frame.size()) < dim - 1; ++i) {
        RatVector e = zero_vector(dim);
        e[static_cast<std::size_t>(i)] = 1;
        RatVector w = vec_sub(e, vec_scale(v[static_cast<std::size_t>(i)] / vv, v));
        for (const auto& b : frame) {
            const Rational bb = vec_dot(b, b);
            const Rational wb = vec_dot(w, b);
            if (wb != 0) w = vec_sub(w, vec_scale(wb / bb, b));
        }
        if (!vec_is_zero(w)) frame.push_back(primitive_direction(w));
    }
    return frame;
}

RatVector project_point(const std::vector<RatVector>& frame, const RatVector& p) {
    RatVector coords(frame.size());
    for (std::size_t k = 0; k < frame.size(); ++k)
        coords[k] = vec_dot(p, frame[k]) / vec_dot(frame[k], frame[k]);
    return coords;
}

LatticePolytope project_polytope(const LatticePolytope& poly, const RatVector& v) {
    const auto frame = projection_frame(poly.dim, v);
    std::vector<RatVector> images;
    images.reserve(poly.vertices.size());
    for (const auto& vert : poly.vertices) images.push_back(project_point(frame, vert));
    return make_polytope(poly.dim - 1, std::move(images));
}

}  // namespace minkcx
