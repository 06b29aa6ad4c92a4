#ifndef BETTILAB_HYPERGRAPH_HPP
#define BETTILAB_HYPERGRAPH_HPP

#include "bettilab/errors.hpp"
#include "bettilab/util.hpp"

#include <optional>
#include <vector>

namespace bettilab {

/// A hypergraph on vertices 1..n whose edge set is an antichain of nonempty
/// vertex subsets. Doubles as the minimal-generator support description of a
/// squarefree monomial ideal. Immutable after construction; edges are kept in
/// canonical order (cardinality, then lexicographic).
class Hypergraph {
public:
    Hypergraph() : n_(0) {}

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexSet>& edges() const { return edges_; }
    VertexSet edge(int i) const { return edges_[i]; }
    std::vector<int> edge_vertices(int i) const { return set_to_vertices(edges_[i]); }

    /// Max edge cardinality; 0 for an edgeless hypergraph.
    int degree() const;
    bool pure() const;

    /// Union of all edges.
    VertexSet support() const;

    bool operator==(const Hypergraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    friend Hypergraph make_hypergraph(int, const std::vector<VertexSet>&, bool);
    int n_;
    std::vector<VertexSet> edges_; // canonical order
};

/// Validates and canonicalizes raw edges. With minimalize on, edges that
/// contain another edge are dropped and duplicates removed; otherwise any
/// containment (duplicates included) is a NotAntichain error.
Hypergraph make_hypergraph(int n, const std::vector<VertexSet>& raw_edges, bool minimalize = false);
Hypergraph make_hypergraph(int n, const std::vector<std::vector<int>>& raw_edges,
                           bool minimalize = false);

/// Result of vertex-removal operations: vertices renumbered 1..k plus the map
/// back to the labels of the source hypergraph (original[new - 1] = old).
struct RelabeledHypergraph {
    Hypergraph graph;
    std::vector<int> original;
};

/// G[W]: vertex set W, edges exactly those contained in W.
RelabeledHypergraph induced(const Hypergraph& g, VertexSet w);

/// lk_G(v): remove v, replace every edge F containing v by F - {v}, drop edges
/// that become nonminimal. DegenerateLink if {v} itself is an edge (the link's
/// ideal would be the unit).
RelabeledHypergraph link(const Hypergraph& g, int v);

/// G - v: remove v and every edge through v.
RelabeledHypergraph antistar(const Hypergraph& g, int v);

/// The Stanley-Reisner complex of an edge ideal, described by its minimal
/// nonfaces. F is a face iff F is a subset of `vertices` containing no
/// nonface; the empty set is always a face.
struct SimplicialComplexView {
    int n = 0;                               // ambient label bound
    VertexSet vertices = 0;                  // the complex's vertex set
    std::vector<VertexSet> minimal_nonfaces; // only nonfaces within `vertices`

    static SimplicialComplexView of(const Hypergraph& g);

    /// Induced subcomplex on w (labels preserved).
    SimplicialComplexView induced(VertexSet w) const;

    bool is_face(VertexSet f) const;
};

/// Proper coloring: no two vertices of one edge share a color.
struct Coloring {
    int colors = 0;
    std::vector<int> assignment; // assignment[v-1] in 1..colors

    int color_of(int v) const { return assignment[v - 1]; }
    VertexSet color_class(int c) const;
};

bool is_proper_coloring(const Hypergraph& g, const Coloring& kappa);

/// An edge enumeration F_1,...,F_t with new_counts[i-1] = |F_i - (F_1 u ... u
/// F_{i-1})|; every count from the second on is >= 1 for a hyperforest and
/// exactly 1 (pure case) for a hypertree.
struct TreeOrdering {
    std::vector<int> order;      // edge indices into Hypergraph::edges()
    std::vector<int> new_counts; // new_counts[0] = |F_order[0]|
};

struct OrderingOptions {
    int max_edges = 25; // subset-search cap
};

/// Exact hyperforest recognition by memoized subset search (validity of a
/// placed edge set depends only on its union, so dead prefixes are shared).
std::optional<TreeOrdering> forest_ordering(const Hypergraph& g, const OrderingOptions& opts = {});

/// Hypertree recognition: pure and some enumeration adds exactly one vertex
/// per edge after the first.
std::optional<TreeOrdering> tree_ordering(const Hypergraph& g, const OrderingOptions& opts = {});

/// Proper d-coloring, or nullopt if none exists. Hypertrees with d == degree
/// are colored by propagation along a tree ordering (first edge gets colors
/// 1..d in vertex order); everything else falls back to backtracking.
/// Vertices in no edge get color 1.
std::optional<Coloring> proper_coloring(const Hypergraph& g, int d,
                                        const OrderingOptions& opts = {});

/// Vertices contained in exactly one edge.
VertexSet leaves(const Hypergraph& g);

/// Max over vertex pairs of the BFS edge distance. Requires a connected pure
/// degree-2 hypergraph covering all its vertices.
int diameter(const Hypergraph& g);

/// Simple graph on edge indices: i ~ j iff F_i and F_j intersect.
struct IntersectionGraph {
    int count = 0;
    std::vector<std::uint64_t> bits; // row-major, stride words per row

    int stride() const { return (count + 63) / 64; }
    bool adjacent(int i, int j) const {
        return (bits[std::size_t(i) * stride() + j / 64] >> (j % 64)) & 1u;
    }
    int vertex_degree(int i) const;
    std::int64_t total_edges() const;
};

IntersectionGraph intersection_graph(const Hypergraph& g);

} // namespace bettilab

#endif
