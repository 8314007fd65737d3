/*
 * Finite simplicial complexes on vertex set {1,...,n}, stored as facet lists.
 *
 * Subsets are bitmasks (bit v-1 <=> vertex v), which keeps membership a
 * subset test; n is capped at 20 since several operations enumerate 2^n
 * subsets. The void complex (no faces at all, not even the empty face) is
 * distinguished from the empty complex {<empty>} by an explicit flag; the
 * reduced Euler characteristic separates them (0 vs -1).
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace minkcx {

using Subset = std::uint32_t;

constexpr int kMaxVertices = 20;

int subset_size(Subset s);
Subset subset_of(const std::vector<int>& vertices_1based, int n);
std::vector<int> subset_vertices(Subset s);
std::string subset_to_string(Subset s);

/** Sequence-lexicographic order on vertex sets ({1,2} < {1,3} < {2}). */
bool subset_lex_less(Subset a, Subset b);

struct SimplicialComplex {
    int n = 0;
    std::vector<Subset> facets;  // inclusion-maximal, sequence-lex sorted
    bool is_void = false;        // no faces at all; facets empty

    bool operator==(const SimplicialComplex& other) const = default;
};

SimplicialComplex void_complex(int n);
SimplicialComplex empty_complex(int n);  // the complex {<empty face>}
SimplicialComplex full_simplex(int n);

/** Normalize a facet list (dedup, drop dominated, sort). Vertices are 1-based. */
SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facet_list);
SimplicialComplex from_facet_masks(int n, std::vector<Subset> facet_masks);

/** Build the complex whose faces are exactly the given subsets (downward closed). */
SimplicialComplex from_face_masks(int n, const std::vector<Subset>& faces);

bool member(const SimplicialComplex& cx, Subset sigma);

/** All inclusion-minimal nonfaces, sorted; the complex must not be void. */
std::vector<Subset> minimal_nonfaces(const SimplicialComplex& cx);

/** Reduced Euler characteristic; 0 for void, -1 for {<empty>}. */
long long reduced_euler(const SimplicialComplex& cx);

/** Join; the second factor's vertices are shifted by the first one's n. */
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // (u, v) with u < v, sorted

    bool operator==(const Graph& other) const = default;
};

Graph one_skeleton(const SimplicialComplex& cx);

/**
 * Shiftedness under the given vertex order (order[0] is the smallest): for
 * every face sigma, swapping any member for a smaller non-member again
 * yields a face.
 */
bool is_shifted(const SimplicialComplex& cx, const std::vector<int>& order);

struct JoinDecomposition {
    std::vector<Subset> blocks;  // vertex sets of the non-cone join factors
    Subset cone_vertices = 0;    // vertices in every facet
};

/**
 * Finest join decomposition: cone vertices are those in no minimal nonface;
 * the rest splits into connected components of the minimal-nonface
 * co-occurrence graph. Requires a non-void complex in which every vertex is
 * a face. The factorization is re-verified before returning.
 */
JoinDecomposition join_decomposition(const SimplicialComplex& cx);

/** Faces lying inside the vertex mask, relabeled to 1..|mask| (mask order). */
SimplicialComplex induced_subcomplex(const SimplicialComplex& cx, Subset vertices);

/** Every face, as masks, in sequence-lex order. Guarded by kMaxVertices. */
std::vector<Subset> all_faces(const SimplicialComplex& cx);

std::string to_string(const SimplicialComplex& cx);

}  // namespace minkcx
