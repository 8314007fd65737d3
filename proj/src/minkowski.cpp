#include "minkcx/minkowski.hpp"

#include "minkcx/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace minkcx {

SimplicialComplex minkowski_complex(const PolytopeFamily& fam) {
    const int n = fam.size();
    if (vec_is_zero(fam.basepoint)) return void_complex(n);  // 0 lies in every P_sigma

    std::vector<Subset> by_size_desc;
    const std::uint64_t limit = std::uint64_t(1) << n;
    for (std::uint64_t s = 0; s < limit; ++s) by_size_desc.push_back(Subset(s));
    std::sort(by_size_desc.begin(), by_size_desc.end(), [](Subset a, Subset b) {
        const int pa = subset_size(a), pb = subset_size(b);
        return pa != pb ? pa > pb : a < b;
    });

    // Supersets are classified first, so a subset of a known face needs no LP,
    // and a face found by LP has no face above it: the found list is exactly
    // the facet list.
    std::vector<Subset> facets;
    for (Subset sigma : by_size_desc) {
        bool known = false;
        for (Subset f : facets)
            if ((sigma & f) == sigma) { known = true; break; }
        if (known) continue;
        if (!sum_contains(fam, sigma, fam.basepoint)) facets.push_back(sigma);
    }
    return from_facet_masks(n, facets);
}

long long discrete_volume(const PolytopeFamily& fam, Subset sigma, long long cell_budget) {
    for (int i : subset_vertices(sigma))
        if (!is_lattice(fam.members[static_cast<std::size_t>(i - 1)]))
            throw std::domain_error("discrete_volume: member " + std::to_string(i) +
                                    " has non-integer vertices");
    return static_cast<long long>(lattice_points(fam, sigma, cell_budget).size());
}

long long discrete_mixed_volume(const PolytopeFamily& fam, long long cell_budget) {
    const int n = fam.size();
    if (n < 1) throw std::invalid_argument("discrete_mixed_volume: empty family");
    long long total = 0;
    const std::uint64_t limit = std::uint64_t(1) << n;
    for (std::uint64_t s = 0; s < limit; ++s) {
        const Subset sigma = Subset(s);
        const long long volume = discrete_volume(fam, sigma, cell_budget);
        total += ((n - subset_size(sigma)) % 2 == 0) ? volume : -volume;
    }
    return total;
}

long long indicator_f(const PolytopeFamily& fam, const RatVector& x) {
    const int n = fam.size();
    long long total = 0;
    const std::uint64_t limit = std::uint64_t(1) << n;
    for (std::uint64_t s = 0; s < limit; ++s) {
        const Subset sigma = Subset(s);
        if (!sum_contains(fam, sigma, x)) continue;
        total += ((n - subset_size(sigma)) % 2 == 0) ? 1 : -1;
    }
    return total;
}

Thm1Report verify_theorem1(const PolytopeFamily& fam, long long cell_budget) {
    const int n = fam.size();
    if (n < 1) throw std::invalid_argument("verify_theorem1: empty family");
    if (!all_members_lattice(fam))
        throw std::domain_error("verify_theorem1: family has non-lattice members");

    Thm1Report report;
    report.sign = n % 2 == 0 ? 1 : -1;
    report.cme = discrete_mixed_volume(fam, cell_budget);

    const Subset full = fam.full_set();
    const auto points = lattice_points(fam, full, cell_budget);
    PolytopeFamily probe = fam;
    for (const auto& mu : points) {
        probe.basepoint = mu;
        const long long chi = reduced_euler(minkowski_complex(probe));
        if (report.sign * indicator_f(fam, mu) != chi)
            throw VerificationError("pointwise identity fails at " + to_string(mu));
        report.per_point.emplace_back(mu, chi);
        report.euler_sum += chi;
    }
    report.identity_holds = (report.sign * report.cme == report.euler_sum);

    // chi~ must vanish at lattice points of the bounding box outside P_[n];
    // spot-check a few (F vanishes there, so the pointwise identity forces 0).
    const IntBox box = sum_bounding_box(fam, full);
    int checked = 0;
    std::vector<long long> cursor = box.lower;
    const long long cells = std::min(box.cell_count(), cell_budget);
    for (long long step = 0; step < cells && checked < 16; ++step) {
        RatVector x(static_cast<std::size_t>(fam.dim));
        for (std::size_t j = 0; j < cursor.size(); ++j) x[j] = cursor[j];
        const bool inside =
            std::binary_search(points.begin(), points.end(), x,
                               [](const RatVector& a, const RatVector& b) { return vec_compare(a, b) < 0; });
        if (!inside) {
            probe.basepoint = x;
            if (reduced_euler(minkowski_complex(probe)) != 0)
                throw VerificationError("chi~ nonzero outside P_[n] at " + to_string(x));
            ++checked;
        }
        for (std::size_t j = cursor.size(); j-- > 0;) {
            if (++cursor[j] <= box.upper[j]) break;
            cursor[j] = box.lower[j];
        }
    }
    return report;
}

}  // namespace minkcx
