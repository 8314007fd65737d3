#include "minkcx/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace minkcx {

namespace {

// Recover t from the vertex list of [0,t_1] x ... x [0,t_d], or fail.
RatVector box_sides(const LatticePolytope& poly) {
    RatVector sides(static_cast<std::size_t>(poly.dim), Rational(0));
    for (const auto& v : poly.vertices)
        for (std::size_t j = 0; j < v.size(); ++j) sides[j] = std::max(sides[j], v[j]);
    std::size_t expected = 1;
    for (const auto& t : sides) {
        if (t < 0) throw std::domain_error("oracle: member is not a [0,t] box");
        if (t > 0) expected *= 2;
    }
    if (poly.vertices.size() != expected)
        throw std::domain_error("oracle: member is not a [0,t] box");
    for (const auto& v : poly.vertices)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0 && v[j] != sides[j])
                throw std::domain_error("oracle: member is not a [0,t] box");
    return sides;
}

}  // namespace

bool oracle_box_membership(const PolytopeFamily& fam, Subset sigma, const RatVector& x) {
    if (x.size() != static_cast<std::size_t>(fam.dim))
        throw std::invalid_argument("oracle_box_membership: point dimension mismatch");
    RatVector total(static_cast<std::size_t>(fam.dim), Rational(0));
    for (int i : subset_vertices(sigma)) {
        const RatVector sides = box_sides(fam.members[static_cast<std::size_t>(i - 1)]);
        for (std::size_t j = 0; j < total.size(); ++j) total[j] += sides[j];
    }
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] < 0 || x[j] > total[j]) return false;
    return true;
}

long long oracle_euler(const SimplicialComplex& cx) {
    if (cx.n > kMaxVertices) throw std::invalid_argument("oracle_euler: too many vertices");
    long long signed_sum = 0;
    const std::uint64_t limit = std::uint64_t(1) << cx.n;
    for (std::uint64_t s = 0; s < limit; ++s) {
        if (!member(cx, Subset(s))) continue;
        signed_sum += subset_size(Subset(s)) % 2 == 0 ? 1 : -1;
    }
    return -signed_sum;
}

std::optional<ThresholdCertificate> oracle_threshold_bruteforce(const SimplicialComplex& cx,
                                                                int grid) {
    if (cx.is_void) return std::nullopt;
    const int n = cx.n;
    if (n > 4) throw std::invalid_argument("oracle_threshold_bruteforce: n > 4");

    std::vector<int> weights(static_cast<std::size_t>(n), 0);
    const int max_mu = std::max(1, n * grid);
    auto valid = [&](int mu) {
        for (int w : weights)
            if (w > mu) return false;
        const std::uint64_t limit = std::uint64_t(1) << n;
        for (std::uint64_t s = 0; s < limit; ++s) {
            int sum = 0;
            for (int v = 0; v < n; ++v)
                if (s & (std::uint64_t(1) << v)) sum += weights[static_cast<std::size_t>(v)];
            if ((sum < mu) != member(cx, Subset(s))) return false;
        }
        return true;
    };
    auto scan = [&](auto&& self, int pos) -> std::optional<ThresholdCertificate> {
        if (pos == n) {
            for (int mu = 1; mu <= max_mu; ++mu)
                if (valid(mu)) {
                    ThresholdCertificate cert;
                    for (int w : weights) cert.weights.emplace_back(w);
                    cert.threshold = mu;
                    return cert;
                }
            return std::nullopt;
        }
        for (int w = 0; w <= grid; ++w) {
            weights[static_cast<std::size_t>(pos)] = w;
            if (auto cert = self(self, pos + 1)) return cert;
        }
        return std::nullopt;
    };
    return scan(scan, 0);
}

}  // namespace minkcx
