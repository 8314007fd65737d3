/*
 * minkcx: command-line front end.
 *
 * Exit codes: 0 success / affirmative answer, 1 negative mathematical
 * answer, 2 usage or parse error, 3 budget exceeded, 4 internal
 * verification failure.
 */

#include "minkcx/errors.hpp"
#include "minkcx/io.hpp"
#include "minkcx/minkowski.hpp"
#include "minkcx/oracle.hpp"
#include "minkcx/realize.hpp"
#include "minkcx/simplicial_complex.hpp"
#include "minkcx/threshold.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <string>

namespace {

using namespace minkcx;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

long long cell_budget_from_env() {
    if (const char* env = std::getenv("MINKCX_BUDGET")) {
        try {
            const long long value = std::stoll(env);
            if (value > 0) return value;
        } catch (...) {
        }
        throw ParseError("MINKCX_BUDGET must be a positive integer");
    }
    return kDefaultCellBudget;
}

std::string describe_certificate(const ThresholdCertificate& cert) {
    std::string out = "lambda = (";
    for (std::size_t i = 0; i < cert.weights.size(); ++i) {
        if (i) out += ", ";
        out += to_string(cert.weights[i]);
    }
    out += "), mu = " + to_string(cert.threshold);
    return out;
}

void print_complex_summary(const SimplicialComplex& cx) {
    std::cout << "n: " << cx.n << "\n";
    if (cx.is_void) {
        std::cout << "void: true (no faces at all)\n";
        return;
    }
    std::cout << "facets:";
    for (Subset f : cx.facets) std::cout << " " << subset_to_string(f);
    std::cout << "\n";
}

int cmd_complex_info(const std::string& path) {
    const SimplicialComplex cx = parse_complex_doc(read_file(path));
    std::cout << "command: complex-info " << path << "\n";
    print_complex_summary(cx);
    std::cout << "reduced euler characteristic: " << reduced_euler(cx) << "\n";
    if (cx.is_void) return kExitOk;

    const auto nonfaces = minimal_nonfaces(cx);
    std::cout << "minimal nonfaces:";
    if (nonfaces.empty()) std::cout << " (none)";
    for (Subset nf : nonfaces) std::cout << " " << subset_to_string(nf);
    std::cout << "\n";

    std::vector<int> identity(static_cast<std::size_t>(cx.n));
    std::iota(identity.begin(), identity.end(), 1);
    std::cout << "shifted under identity order: " << (is_shifted(cx, identity) ? "yes" : "no")
              << "\n";
    if (const auto cert = recognize_threshold(cx)) {
        std::cout << "threshold: yes, " << describe_certificate(*cert) << "\n";
        std::vector<int> order(identity);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return cert->weights[static_cast<std::size_t>(a - 1)] <
                   cert->weights[static_cast<std::size_t>(b - 1)];
        });
        std::cout << "shifted under weight-sorted order (";
        for (std::size_t i = 0; i < order.size(); ++i) std::cout << (i ? " " : "") << order[i];
        std::cout << "): " << (is_shifted(cx, order) ? "yes" : "no") << "\n";
    } else {
        std::cout << "threshold: no\n";
    }

    bool all_vertices_faces = true;
    for (int v = 1; v <= cx.n; ++v)
        if (!member(cx, Subset(1) << (v - 1))) all_vertices_faces = false;
    if (all_vertices_faces) {
        const JoinDecomposition decomp = join_decomposition(cx);
        std::cout << "join decomposition: cone " << subset_to_string(decomp.cone_vertices)
                  << ", blocks";
        if (decomp.blocks.empty()) std::cout << " (none)";
        for (Subset b : decomp.blocks) std::cout << " " << subset_to_string(b);
        std::cout << "\n";
    } else {
        std::cout << "join decomposition: skipped (some vertices are not faces)\n";
    }
    return kExitOk;
}

int cmd_minkcx(const std::string& path, const std::string& out_path) {
    const PolytopeFamily fam = parse_family_doc(read_file(path));
    const SimplicialComplex cx = minkowski_complex(fam);
    std::cout << "command: minkcx " << path << "\n";
    std::cout << "family: dim " << fam.dim << ", " << fam.size() << " members, basepoint "
              << to_string(fam.basepoint) << "\n";
    const std::uint64_t subsets = std::uint64_t(1) << fam.size();
    std::uint64_t faces = 0;
    if (!cx.is_void) faces = static_cast<std::uint64_t>(all_faces(cx).size());
    std::cout << "faces: " << faces << ", nonfaces: " << (subsets - faces) << "\n";
    const std::string doc = complex_doc(cx);
    std::cout << doc;
    if (!out_path.empty()) {
        write_file(out_path, doc);
        std::cout << "written: " << out_path << "\n";
    }
    return kExitOk;
}

int cmd_verify_thm1(const std::string& path, long long cell_budget) {
    const PolytopeFamily fam = parse_family_doc(read_file(path));
    if (!all_members_lattice(fam))
        throw ParseError("verify-thm1 needs lattice polytopes (integer vertices)");
    const Thm1Report report = verify_theorem1(fam, cell_budget);
    std::cout << "command: verify-thm1 " << path << "\n";
    std::cout << "n: " << fam.size() << ", sign (-1)^n: " << report.sign << "\n";
    std::cout << "discrete mixed volume: " << report.cme << "\n";
    std::cout << "lattice points of the full sum: " << report.per_point.size() << "\n";
    for (const auto& [mu, chi] : report.per_point)
        std::cout << "  mu = " << to_string(mu) << "  chi~ = " << chi << "\n";
    std::cout << "euler sum: " << report.euler_sum << "\n";
    std::cout << "identity sign*CME == euler sum: " << (report.identity_holds ? "PASS" : "FAIL")
              << "\n";
    if (!report.identity_holds)
        throw VerificationError("theorem 1 identity failed; this signals a bug");
    return kExitOk;
}

int cmd_threshold(const std::string& path) {
    const SimplicialComplex cx = parse_complex_doc(read_file(path));
    if (cx.is_void) throw ParseError("threshold: the void complex has no threshold question");
    std::cout << "command: threshold " << path << "\n";
    if (const auto cert = recognize_threshold(cx)) {
        std::cout << "threshold: yes\n";
        std::cout << "certificate: " << describe_certificate(*cert) << "\n";
        std::cout << "verified: certificate regenerates the complex\n";
        return kExitOk;
    }
    std::cout << "threshold: no\n";
    if (const auto witness = find_forbidden(cx))
        std::cout << "forbidden quadruple: " << to_string(*witness) << "\n";
    else
        std::cout << "forbidden quadruple: none found\n";
    return kExitNegative;
}

int cmd_ctd(const std::string& path, long long budget, std::uint64_t seed,
            std::string realization_out) {
    const SimplicialComplex cx = parse_complex_doc(read_file(path));
    if (cx.is_void) throw ParseError("ctd: the void complex is excluded by convention");
    std::cout << "command: ctd " << path << " --budget " << budget << " --seed " << seed << "\n";
    if (cx.facets.size() == 1 && cx.facets[0] == 0) {
        std::cout << "note: this is the empty complex {<empty face>}; on zero vertices it is the\n"
                  << "      unique complex of dimension 0; bounds below use the ambient dimension\n"
                  << "      of concrete realizations.\n";
    }
    const CtdBounds bounds = ctd_bounds(cx, budget, seed);
    std::cout << "ctd lower bound: " << bounds.lower << "\n";
    const auto& ev = bounds.lower_evidence;
    if (ev.phantom_vertices)
        std::cout << "  non-face vertices (ctd-neutral): " << subset_to_string(ev.phantom_vertices)
                  << "\n";
    std::cout << "  base " << subset_to_string(ev.base_vertices) << ": "
              << (ev.base_kind == BaseKind::Empty       ? "empty"
                  : ev.base_kind == BaseKind::Threshold ? "threshold"
                                                        : "not threshold")
              << "\n";
    if (ev.base_certificate)
        std::cout << "  base certificate: " << describe_certificate(*ev.base_certificate) << "\n";
    for (const auto& g : ev.groups)
        std::cout << "  group " << subset_to_string(g.vertices) << ": " << to_string(g.witness)
                  << "\n";
    if (ev.heuristic) std::cout << "  grouping search was heuristic; bound may not be maximal\n";

    std::cout << "ctd upper bound: " << bounds.upper << "\n";
    const auto& up = bounds.upper_evidence;
    if (up.via_threshold) {
        std::cout << "  realization: threshold segments on the line\n";
    } else {
        std::cout << "  realization: box construction, dimension trajectory";
        for (int d : up.trajectory) std::cout << " " << d;
        std::cout << "\n";
        if (up.trajectory.size() == 1) std::cout << "  no avoiding line found within budget\n";
    }
    if (!family_realizes(up.family, cx))
        throw VerificationError("ctd: emitted realization failed re-verification");
    if (realization_out.empty()) realization_out = path + ".realization.json";
    write_file(realization_out, family_doc(up.family));
    std::cout << "realization written: " << realization_out << "\n";
    return kExitOk;
}

int cmd_realize(const std::string& path, const std::string& mode, const std::string& out_path,
                long long cell_budget) {
    const SimplicialComplex cx = parse_complex_doc(read_file(path));
    if (cx.is_void) throw ParseError("realize: the void complex has no realization here");
    std::cout << "command: realize " << path << " --mode " << mode << "\n";
    const PolytopeFamily boxes = realize_boxes(cx);
    if (mode == "boxes") {
        if (!family_realizes(boxes, cx))
            throw VerificationError("realize: box family failed re-verification");
        std::cout << "verified: box family realizes the complex in dimension " << boxes.dim
                  << "\n";
        const std::string doc = family_doc(boxes);
        std::cout << doc;
        if (!out_path.empty()) {
            write_file(out_path, doc);
            std::cout << "written: " << out_path << "\n";
        }
        return kExitOk;
    }
    if (mode != "discrete") throw ParseError("realize: mode must be boxes or discrete");
    const DiscreteFamily dfam = discrete_realization(boxes, cx);
    if (minkowski_complex_discrete(dfam, cell_budget) != cx)
        throw VerificationError("realize: discrete family failed re-verification");
    std::cout << "verified: discrete family realizes the complex in dimension " << dfam.dim
              << "\n";
    const std::string doc = discrete_doc(dfam);
    std::cout << doc;
    if (!out_path.empty()) {
        write_file(out_path, doc);
        std::cout << "written: " << out_path << "\n";
    }
    return kExitOk;
}

int cmd_reduce(const std::string& family_path, const std::string& complex_path, long long budget,
               std::uint64_t seed, const std::string& out_path) {
    const PolytopeFamily fam = parse_family_doc(read_file(family_path));
    const SimplicialComplex cx = parse_complex_doc(read_file(complex_path));
    std::cout << "command: reduce " << family_path << " " << complex_path << " --budget " << budget
              << " --seed " << seed << "\n";
    if (!family_realizes(fam, cx)) {
        std::cout << "realization mismatch: the family does not realize the complex\n";
        return kExitNegative;
    }
    const ReduceResult result = reduce_dimension(fam, cx, budget, seed);
    std::cout << "dimension trajectory:";
    for (int d : result.trajectory) std::cout << " " << d;
    std::cout << "\n";
    if (result.trajectory.size() == 1) std::cout << "no avoiding line found within budget\n";
    if (!family_realizes(result.family, cx))
        throw VerificationError("reduce: reduced family failed re-verification");
    const std::string doc = family_doc(result.family);
    std::cout << doc;
    if (!out_path.empty()) {
        write_file(out_path, doc);
        std::cout << "written: " << out_path << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Minkowski-complex toolkit"};
    app.require_subcommand(1);

    std::string in_path, second_path, out_path, mode = "boxes", realization_out;
    long long budget = 64;
    std::uint64_t seed = 0;

    auto* info = app.add_subcommand("complex-info", "summarize a complex document");
    info->add_option("file", in_path, "complex document")->required();

    auto* mink = app.add_subcommand("minkcx", "Minkowski complex of a family");
    mink->add_option("file", in_path, "family document")->required();
    mink->add_option("-o,--out", out_path, "write the complex document here");

    auto* thm1 = app.add_subcommand("verify-thm1", "check the discrete-mixed-volume identity");
    thm1->add_option("file", in_path, "family document (lattice polytopes)")->required();

    auto* thresh = app.add_subcommand("threshold", "threshold recognition with certificate");
    thresh->add_option("file", in_path, "complex document")->required();

    auto* ctd = app.add_subcommand("ctd", "bounds for the convex threshold dimension");
    ctd->add_option("file", in_path, "complex document")->required();
    ctd->add_option("--budget", budget, "direction-search budget");
    ctd->add_option("--seed", seed, "seed for randomized searches");
    ctd->add_option("--realization-out", realization_out, "path for the upper-bound realization");

    auto* realize = app.add_subcommand("realize", "emit a verified realization");
    realize->add_option("file", in_path, "complex document")->required();
    realize->add_option("--mode", mode, "boxes or discrete")->required();
    realize->add_option("-o,--out", out_path, "write the family document here");

    auto* reduce = app.add_subcommand("reduce", "project a realization to lower dimension");
    reduce->add_option("family", in_path, "family document")->required();
    reduce->add_option("complex", second_path, "complex document")->required();
    reduce->add_option("--budget", budget, "direction-search budget");
    reduce->add_option("--seed", seed, "seed for randomized searches");
    reduce->add_option("-o,--out", out_path, "write the reduced family here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const long long cell_budget = cell_budget_from_env();
        if (info->parsed()) return cmd_complex_info(in_path);
        if (mink->parsed()) return cmd_minkcx(in_path, out_path);
        if (thm1->parsed()) return cmd_verify_thm1(in_path, cell_budget);
        if (thresh->parsed()) return cmd_threshold(in_path);
        if (ctd->parsed()) return cmd_ctd(in_path, budget, seed, realization_out);
        if (realize->parsed()) return cmd_realize(in_path, mode, out_path, cell_budget);
        if (reduce->parsed()) return cmd_reduce(in_path, second_path, budget, seed, out_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const VerificationError& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
