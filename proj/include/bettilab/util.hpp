#ifndef BETTILAB_UTIL_HPP
#define BETTILAB_UTIL_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace bettilab {

// Vertex subsets are bitmasks over at most 64 vertices: bit v-1 <-> vertex v.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

inline int popcount(VertexSet s) { return std::popcount(s); }

inline VertexSet full_mask(int n) { return n >= 64 ? ~VertexSet(0) : ((VertexSet(1) << n) - 1); }

inline bool contains(VertexSet s, int v) { return (s >> (v - 1)) & 1u; }

inline VertexSet singleton(int v) { return VertexSet(1) << (v - 1); }

inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

std::vector<int> set_to_vertices(VertexSet s);
VertexSet vertices_to_set(const std::vector<int>& vs);

// Order on equal-size sets matching lexicographic order of the sorted vertex
// sequences: the lowest bit where the masks differ decides.
inline bool lex_less_same_size(VertexSet a, VertexSet b) {
    if (a == b) return false;
    VertexSet diff = a ^ b;
    return (a >> std::countr_zero(diff)) & 1u;
}

// Canonical edge order: by cardinality, then lexicographically.
inline bool canonical_edge_less(VertexSet a, VertexSet b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return lex_less_same_size(a, b);
}

std::int64_t binomial(std::int64_t n, std::int64_t k);

// Next k-subset mask in lexicographic mask order (Gosper's hack).
inline std::uint64_t next_same_popcount(std::uint64_t v) {
    std::uint64_t c = v & -v;
    std::uint64_t r = v + c;
    return ((((v ^ r) >> 2) / c) | r);
}

// rank-th k-subset of {0,..,n-1} in the order enumerated by Gosper iteration
// (colexicographic-compatible unranking via the combinatorial number system).
std::uint64_t unrank_subset(int n, int k, std::int64_t rank);

// --- engine threading -------------------------------------------------------

// 0 restores the default (hardware concurrency, or BETTILAB_THREADS if set).
void set_thread_count(int threads);
int effective_thread_count();

// Runs fn(chunk_index, begin, end) on [0, count) split into contiguous chunks,
// one per worker. fn must only touch chunk-local state.
void parallel_chunks(std::int64_t count,
                     const std::function<void(int, std::int64_t, std::int64_t)>& fn);

} // namespace bettilab

#endif
