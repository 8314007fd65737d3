#include "minkcx/simplicial_complex.hpp"

#include "minkcx/errors.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>

namespace minkcx {

int subset_size(Subset s) { return std::popcount(s); }

Subset subset_of(const std::vector<int>& vertices_1based, int n) {
    Subset s = 0;
    for (int v : vertices_1based) {
        if (v < 1 || v > n) throw std::out_of_range("vertex " + std::to_string(v) +
                                                    " out of range [1.." + std::to_string(n) + "]");
        s |= Subset(1) << (v - 1);
    }
    return s;
}

std::vector<int> subset_vertices(Subset s) {
    std::vector<int> out;
    for (int v = 1; s; ++v, s >>= 1)
        if (s & 1) out.push_back(v);
    return out;
}

std::string subset_to_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int v : subset_vertices(s)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

bool subset_lex_less(Subset a, Subset b) {
    if (a == b) return false;
    // Vertices below the lowest differing one are shared; the shorter set is
    // a prefix of the other exactly when it has nothing at or above that bit.
    const Subset diff = a ^ b;
    const Subset low = diff & (~diff + 1);
    const Subset at_or_above = ~(low - 1);
    if (a & low) return (b & at_or_above) != 0;  // b continues => a smaller; else b is a prefix
    return (a & at_or_above) == 0;               // a is a prefix of b
}

namespace {

void check_n(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::out_of_range("vertex count " + std::to_string(n) + " outside [0.." +
                                std::to_string(kMaxVertices) + "]");
}

std::vector<Subset> normalize_facets(std::vector<Subset> facets) {
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<Subset> maximal;
    for (Subset f : facets) {
        bool dominated = false;
        for (Subset g : facets)
            if (f != g && (f & g) == f) { dominated = true; break; }
        if (!dominated) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end(), subset_lex_less);
    return maximal;
}

}  // namespace

SimplicialComplex void_complex(int n) {
    check_n(n);
    return {n, {}, true};
}

SimplicialComplex empty_complex(int n) {
    check_n(n);
    return {n, {Subset(0)}, false};
}

SimplicialComplex full_simplex(int n) {
    check_n(n);
    const Subset all = n == 0 ? 0 : (Subset(1) << n) - 1;
    return {n, {all}, false};
}

SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facet_list) {
    check_n(n);
    std::vector<Subset> masks;
    masks.reserve(facet_list.size());
    for (const auto& f : facet_list) masks.push_back(subset_of(f, n));
    return from_facet_masks(n, std::move(masks));
}

SimplicialComplex from_facet_masks(int n, std::vector<Subset> facet_masks) {
    check_n(n);
    const Subset all = n == 0 ? 0 : (Subset(1) << n) - 1;
    for (Subset f : facet_masks)
        if ((f & ~all) != 0) throw std::out_of_range("facet vertex out of range");
    if (facet_masks.empty()) return void_complex(n);
    return {n, normalize_facets(std::move(facet_masks)), false};
}

SimplicialComplex from_face_masks(int n, const std::vector<Subset>& faces) {
    if (faces.empty()) return void_complex(n);
    return from_facet_masks(n, faces);
}

bool member(const SimplicialComplex& cx, Subset sigma) {
    if (cx.is_void) return false;
    for (Subset f : cx.facets)
        if ((sigma & f) == sigma) return true;
    return false;
}

std::vector<Subset> minimal_nonfaces(const SimplicialComplex& cx) {
    if (cx.is_void) throw std::domain_error("minimal_nonfaces: void complex");
    // Ascending-cardinality scan; subsets containing a found nonface are skipped.
    std::vector<Subset> found;
    std::vector<std::vector<Subset>> by_size(static_cast<std::size_t>(cx.n + 1));
    const std::uint64_t limit = std::uint64_t(1) << cx.n;
    for (std::uint64_t s = 0; s < limit; ++s)
        by_size[static_cast<std::size_t>(subset_size(Subset(s)))].push_back(Subset(s));
    for (const auto& layer : by_size) {
        for (Subset s : layer) {
            bool covered = false;
            for (Subset nf : found)
                if ((nf & s) == nf) { covered = true; break; }
            if (covered) continue;
            if (!member(cx, s)) found.push_back(s);
        }
    }
    std::sort(found.begin(), found.end(), subset_lex_less);
    return found;
}

long long reduced_euler(const SimplicialComplex& cx) {
    if (cx.is_void) return 0;
    // chi~ = sum over nonempty facet subsets S with empty common intersection
    // of (-1)^|S|. Once the running intersection is empty the remaining
    // choices telescope: only the all-in extension survives.
    const auto D = cx.facets.size();
    auto rec = [&](auto&& self, std::size_t idx, int count, Subset inter, bool started) -> long long {
        if (started && inter == 0) {
            return idx == D ? (count % 2 == 0 ? 1 : -1) : 0;
        }
        if (idx == D) return 0;
        long long sum = self(self, idx + 1, count, inter, started);  // skip facet idx
        const Subset next = started ? (inter & cx.facets[idx]) : cx.facets[idx];
        sum += self(self, idx + 1, count + 1, next, true);
        return sum;
    };
    return rec(rec, 0, 0, 0, false);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    check_n(a.n + b.n);
    if (a.is_void || b.is_void) return void_complex(a.n + b.n);
    std::vector<Subset> facets;
    facets.reserve(a.facets.size() * b.facets.size());
    for (Subset fa : a.facets)
        for (Subset fb : b.facets) facets.push_back(fa | (fb << a.n));
    return from_facet_masks(a.n + b.n, std::move(facets));
}

Graph one_skeleton(const SimplicialComplex& cx) {
    Graph g{cx.n, {}};
    for (int u = 1; u <= cx.n; ++u)
        for (int v = u + 1; v <= cx.n; ++v) {
            const Subset pair = (Subset(1) << (u - 1)) | (Subset(1) << (v - 1));
            if (member(cx, pair)) g.edges.emplace_back(u, v);
        }
    return g;
}

bool is_shifted(const SimplicialComplex& cx, const std::vector<int>& order) {
    if (order.size() != static_cast<std::size_t>(cx.n))
        throw std::invalid_argument("is_shifted: order length mismatch");
    std::vector<int> rank(static_cast<std::size_t>(cx.n) + 1, -1);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const int v = order[pos];
        if (v < 1 || v > cx.n || rank[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("is_shifted: not a permutation of 1..n");
        rank[static_cast<std::size_t>(v)] = static_cast<int>(pos);
    }
    for (Subset face : all_faces(cx)) {
        for (int i : subset_vertices(face)) {
            for (int j = 1; j <= cx.n; ++j) {
                if (rank[static_cast<std::size_t>(j)] >= rank[static_cast<std::size_t>(i)]) continue;
                if (face & (Subset(1) << (j - 1))) continue;
                const Subset swapped = (face & ~(Subset(1) << (i - 1))) | (Subset(1) << (j - 1));
                if (!member(cx, swapped)) return false;
            }
        }
    }
    return true;
}

JoinDecomposition join_decomposition(const SimplicialComplex& cx) {
    if (cx.is_void) throw std::domain_error("join_decomposition: void complex");
    for (int v = 1; v <= cx.n; ++v)
        if (!member(cx, Subset(1) << (v - 1)))
            throw std::domain_error("join_decomposition: vertex " + std::to_string(v) +
                                    " is not a face");
    const auto nonfaces = minimal_nonfaces(cx);
    Subset in_nonface = 0;
    for (Subset nf : nonfaces) in_nonface |= nf;
    const Subset all = cx.n == 0 ? 0 : (Subset(1) << cx.n) - 1;
    JoinDecomposition out;
    out.cone_vertices = all & ~in_nonface;

    // Union-find over vertices co-occurring in a minimal nonface.
    std::vector<int> parent(static_cast<std::size_t>(cx.n) + 1);
    for (int v = 0; v <= cx.n; ++v) parent[static_cast<std::size_t>(v)] = v;
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (Subset nf : nonfaces) {
        const auto verts = subset_vertices(nf);
        for (std::size_t i = 1; i < verts.size(); ++i)
            parent[static_cast<std::size_t>(find(verts[i]))] = find(verts[0]);
    }
    std::vector<Subset> block_of(static_cast<std::size_t>(cx.n) + 1, 0);
    for (int v = 1; v <= cx.n; ++v)
        if (in_nonface & (Subset(1) << (v - 1)))
            block_of[static_cast<std::size_t>(find(v))] |= Subset(1) << (v - 1);
    for (int v = 1; v <= cx.n; ++v)
        if (block_of[static_cast<std::size_t>(v)]) out.blocks.push_back(block_of[static_cast<std::size_t>(v)]);
    std::sort(out.blocks.begin(), out.blocks.end(), subset_lex_less);

    // Re-verify: the assembled join of the induced pieces must equal cx.
    std::vector<std::vector<Subset>> factor_facets;
    for (Subset block : out.blocks) {
        std::vector<Subset> restricted;
        for (Subset f : cx.facets) restricted.push_back(f & block);
        factor_facets.push_back(normalize_facets(std::move(restricted)));
    }
    std::vector<Subset> assembled{out.cone_vertices};
    for (const auto& pieces : factor_facets) {
        std::vector<Subset> next;
        for (Subset base : assembled)
            for (Subset piece : pieces) next.push_back(base | piece);
        assembled = std::move(next);
    }
    if (from_facet_masks(cx.n, assembled) != cx)
        throw VerificationError("join_decomposition: factors do not reassemble the complex");
    return out;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& cx, Subset vertices) {
    const auto verts = subset_vertices(vertices);
    std::vector<int> new_label(static_cast<std::size_t>(cx.n) + 1, 0);
    for (std::size_t i = 0; i < verts.size(); ++i)
        new_label[static_cast<std::size_t>(verts[i])] = static_cast<int>(i) + 1;
    if (cx.is_void) return void_complex(static_cast<int>(verts.size()));
    std::vector<Subset> facets;
    for (Subset f : cx.facets) {
        Subset g = 0;
        for (int v : subset_vertices(f & vertices))
            g |= Subset(1) << (new_label[static_cast<std::size_t>(v)] - 1);
        facets.push_back(g);
    }
    return from_facet_masks(static_cast<int>(verts.size()), std::move(facets));
}

std::vector<Subset> all_faces(const SimplicialComplex& cx) {
    std::vector<Subset> out;
    if (cx.is_void) return out;
    std::vector<bool> seen(std::size_t(1) << cx.n, false);
    for (Subset f : cx.facets) {
        // all subsets of f
        Subset s = f;
        for (;;) {
            if (!seen[s]) { seen[s] = true; out.push_back(s); }
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    std::sort(out.begin(), out.end(), subset_lex_less);
    return out;
}

std::string to_string(const SimplicialComplex& cx) {
    if (cx.is_void) return "void complex on " + std::to_string(cx.n) + " vertices";
    std::string out = "complex on " + std::to_string(cx.n) + " vertices, facets ";
    for (std::size_t i = 0; i < cx.facets.size(); ++i) {
        if (i) out += " ";
        out += subset_to_string(cx.facets[i]);
    }
    return out;
}

}  // namespace minkcx
