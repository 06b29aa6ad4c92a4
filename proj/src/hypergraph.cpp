#include "bettilab/hypergraph.hpp"

#include <algorithm>
#include <queue>

namespace bettilab {

int Hypergraph::degree() const {
    int d = 0;
    for (VertexSet e : edges_) d = std::max(d, popcount(e));
    return d;
}

bool Hypergraph::pure() const {
    for (VertexSet e : edges_)
        if (popcount(e) != popcount(edges_[0])) return false;
    return true;
}

VertexSet Hypergraph::support() const {
    VertexSet u = 0;
    for (VertexSet e : edges_) u |= e;
    return u;
}

Hypergraph make_hypergraph(int n, const std::vector<VertexSet>& raw_edges, bool minimalize) {
    if (n < 0 || n > kMaxVertices)
        fail(Errc::TooManyVertices, "vertex count " + std::to_string(n) + " outside 0.." +
                                        std::to_string(kMaxVertices));
    VertexSet ambient = full_mask(n);
    for (VertexSet e : raw_edges) {
        if (e == 0) fail(Errc::EmptyEdge, "edges must be nonempty");
        if (!is_subset(e, ambient))
            fail(Errc::VertexOutOfRange, "edge uses a vertex beyond " + std::to_string(n));
    }

    std::vector<VertexSet> edges = raw_edges;
    std::sort(edges.begin(), edges.end(), canonical_edge_less);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (!minimalize && edges.size() != raw_edges.size())
        fail(Errc::NotAntichain, "duplicate edges");

    // Size-major order means a containing edge always comes later.
    std::vector<VertexSet> kept;
    for (VertexSet e : edges) {
        bool dominated = false;
        for (VertexSet f : kept) {
            if (is_subset(f, e)) {
                dominated = true;
                break;
            }
        }
        if (dominated) {
            if (!minimalize) fail(Errc::NotAntichain, "an edge contains another edge");
        } else {
            kept.push_back(e);
        }
    }

    Hypergraph g;
    g.n_ = n;
    g.edges_ = std::move(kept);
    return g;
}

Hypergraph make_hypergraph(int n, const std::vector<std::vector<int>>& raw_edges,
                           bool minimalize) {
    std::vector<VertexSet> masks;
    masks.reserve(raw_edges.size());
    for (const auto& vs : raw_edges) {
        VertexSet m = 0;
        for (int v : vs) {
            if (v < 1 || v > n)
                fail(Errc::VertexOutOfRange,
                     "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
            m |= singleton(v);
        }
        masks.push_back(m);
    }
    return make_hypergraph(n, masks, minimalize);
}

namespace {

RelabeledHypergraph relabel_onto(int n, VertexSet kept_vertices,
                                 const std::vector<VertexSet>& kept_edges) {
    std::vector<int> original = set_to_vertices(kept_vertices);
    std::vector<int> new_index(n + 1, 0);
    for (std::size_t i = 0; i < original.size(); ++i) new_index[original[i]] = int(i) + 1;

    std::vector<VertexSet> edges;
    edges.reserve(kept_edges.size());
    for (VertexSet e : kept_edges) {
        VertexSet m = 0;
        for (int v : set_to_vertices(e)) m |= singleton(new_index[v]);
        edges.push_back(m);
    }
    RelabeledHypergraph out;
    out.graph = make_hypergraph(int(original.size()), edges, true);
    out.original = std::move(original);
    return out;
}

} // namespace

RelabeledHypergraph induced(const Hypergraph& g, VertexSet w) {
    if (!is_subset(w, full_mask(g.vertex_count())))
        fail(Errc::VertexOutOfRange, "induced set not within 1..n");
    std::vector<VertexSet> kept;
    for (VertexSet e : g.edges())
        if (is_subset(e, w)) kept.push_back(e);
    return relabel_onto(g.vertex_count(), w, kept);
}

RelabeledHypergraph link(const Hypergraph& g, int v) {
    if (v < 1 || v > g.vertex_count()) fail(Errc::VertexOutOfRange, "link vertex outside 1..n");
    VertexSet vbit = singleton(v);
    std::vector<VertexSet> moved;
    for (VertexSet e : g.edges()) {
        if (e == vbit)
            fail(Errc::DegenerateLink,
                 "{" + std::to_string(v) + "} is an edge; the link's ideal is the unit");
        moved.push_back(e & ~vbit);
    }
    // make_hypergraph with minimalize drops the edges that became nonminimal.
    RelabeledHypergraph out = relabel_onto(g.vertex_count(), full_mask(g.vertex_count()) & ~vbit,
                                           moved);
    return out;
}

RelabeledHypergraph antistar(const Hypergraph& g, int v) {
    if (v < 1 || v > g.vertex_count())
        fail(Errc::VertexOutOfRange, "antistar vertex outside 1..n");
    VertexSet vbit = singleton(v);
    std::vector<VertexSet> kept;
    for (VertexSet e : g.edges())
        if (!(e & vbit)) kept.push_back(e);
    return relabel_onto(g.vertex_count(), full_mask(g.vertex_count()) & ~vbit, kept);
}

SimplicialComplexView SimplicialComplexView::of(const Hypergraph& g) {
    SimplicialComplexView k;
    k.n = g.vertex_count();
    k.vertices = full_mask(g.vertex_count());
    k.minimal_nonfaces = g.edges();
    return k;
}

SimplicialComplexView SimplicialComplexView::induced(VertexSet w) const {
    SimplicialComplexView k;
    k.n = n;
    k.vertices = vertices & w;
    for (VertexSet e : minimal_nonfaces)
        if (is_subset(e, k.vertices)) k.minimal_nonfaces.push_back(e);
    return k;
}

bool SimplicialComplexView::is_face(VertexSet f) const {
    if (!is_subset(f, vertices)) return false;
    for (VertexSet e : minimal_nonfaces)
        if (is_subset(e, f)) return false;
    return true;
}

VertexSet Coloring::color_class(int c) const {
    VertexSet s = 0;
    for (std::size_t i = 0; i < assignment.size(); ++i)
        if (assignment[i] == c) s |= VertexSet(1) << i;
    return s;
}

bool is_proper_coloring(const Hypergraph& g, const Coloring& kappa) {
    if (int(kappa.assignment.size()) != g.vertex_count()) return false;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (kappa.color_of(v) < 1 || kappa.color_of(v) > kappa.colors) return false;
    std::vector<char> seen(kappa.colors + 1, 0);
    for (VertexSet e : g.edges()) {
        auto vs = set_to_vertices(e);
        for (int v : vs) {
            if (seen[kappa.color_of(v)]) {
                for (int u : vs) seen[kappa.color_of(u)] = 0;
                return false;
            }
            seen[kappa.color_of(v)] = 1;
        }
        for (int v : vs) seen[kappa.color_of(v)] = 0;
    }
    return true;
}

namespace {

// Exact search for an edge enumeration whose step counts satisfy `step_ok`.
// The feasibility of a placed edge set depends only on the set itself (the
// prefix union), so failed states are memoized in a bitmap.
std::optional<TreeOrdering> ordering_search(const Hypergraph& g, const OrderingOptions& opts,
                                            bool exactly_one) {
    int t = g.edge_count();
    if (t > opts.max_edges)
        fail(Errc::TooManyEdges, std::to_string(t) + " edges exceeds the ordering search cap " +
                                     std::to_string(opts.max_edges));
    TreeOrdering result;
    if (t == 0) return result;

    std::vector<std::uint64_t> dead((std::size_t(1) << t) / 64 + 1, 0);
    auto is_dead = [&](std::uint32_t s) { return (dead[s >> 6] >> (s & 63)) & 1u; };
    auto mark_dead = [&](std::uint32_t s) { dead[s >> 6] |= std::uint64_t(1) << (s & 63); };

    std::uint32_t all = (t == 32) ? ~0u : ((1u << t) - 1);
    std::vector<int> order;
    std::vector<int> counts;

    auto dfs = [&](auto&& self, std::uint32_t placed, VertexSet covered) -> bool {
        if (placed == all) return true;
        if (is_dead(placed)) return false;
        for (int e = 0; e < t; ++e) {
            if ((placed >> e) & 1u) continue;
            int fresh = popcount(g.edge(e) & ~covered);
            bool ok = placed == 0 || (exactly_one ? fresh == 1 : fresh >= 1);
            if (!ok) continue;
            order.push_back(e);
            counts.push_back(placed == 0 ? popcount(g.edge(e)) : fresh);
            if (self(self, placed | (1u << e), covered | g.edge(e))) return true;
            order.pop_back();
            counts.pop_back();
        }
        mark_dead(placed);
        return false;
    };

    if (!dfs(dfs, 0, 0)) return std::nullopt;
    result.order = std::move(order);
    result.new_counts = std::move(counts);
    return result;
}

std::optional<Coloring> backtracking_coloring(const Hypergraph& g, int d) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> edges_at(n + 1);
    for (int i = 0; i < g.edge_count(); ++i)
        for (int v : g.edge_vertices(i)) edges_at[v].push_back(i);

    std::vector<int> color(n + 1, 0);
    auto dfs = [&](auto&& self, int v) -> bool {
        if (v > n) return true;
        if (edges_at[v].empty()) {
            color[v] = 1;
            return self(self, v + 1);
        }
        for (int c = 1; c <= d; ++c) {
            bool ok = true;
            for (int e : edges_at[v]) {
                for (int u : set_to_vertices(g.edge(e))) {
                    if (u != v && color[u] == c) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1)) return true;
            color[v] = 0;
        }
        return false;
    };
    if (!dfs(dfs, 1)) return std::nullopt;
    Coloring kappa;
    kappa.colors = d;
    kappa.assignment.assign(color.begin() + 1, color.end());
    return kappa;
}

} // namespace

std::optional<TreeOrdering> forest_ordering(const Hypergraph& g, const OrderingOptions& opts) {
    return ordering_search(g, opts, false);
}

std::optional<TreeOrdering> tree_ordering(const Hypergraph& g, const OrderingOptions& opts) {
    if (!g.pure()) return std::nullopt;
    return ordering_search(g, opts, true);
}

std::optional<Coloring> proper_coloring(const Hypergraph& g, int d, const OrderingOptions& opts) {
    int deg = g.degree();
    if (d < deg)
        fail(Errc::ColorCountTooSmall,
             std::to_string(d) + " colors < degree " + std::to_string(deg));
    if (d == deg && deg > 0) {
        if (auto ordering = tree_ordering(g, opts)) {
            // Propagation: first edge gets 1..d in vertex order; afterwards each
            // edge has one fresh vertex, which takes the unique missing color.
            // A repeated color among an edge's old vertices means no proper
            // d-coloring exists (hypertree prefixes are rigid up to permutation).
            std::vector<int> color(g.vertex_count() + 1, 0);
            bool ok = true;
            VertexSet covered = 0;
            for (std::size_t step = 0; step < ordering->order.size() && ok; ++step) {
                VertexSet e = g.edge(ordering->order[step]);
                if (step == 0) {
                    int c = 1;
                    for (int v : set_to_vertices(e)) color[v] = c++;
                } else {
                    VertexSet used = 0;
                    int fresh = 0;
                    for (int v : set_to_vertices(e)) {
                        if (contains(covered, v)) {
                            VertexSet bit = VertexSet(1) << (color[v] - 1);
                            if (used & bit) {
                                ok = false;
                                break;
                            }
                            used |= bit;
                        } else {
                            fresh = v;
                        }
                    }
                    if (ok) color[fresh] = std::countr_zero(~used) + 1;
                }
                covered |= e;
            }
            if (!ok) return std::nullopt;
            for (int v = 1; v <= g.vertex_count(); ++v)
                if (color[v] == 0) color[v] = 1;
            Coloring kappa;
            kappa.colors = d;
            kappa.assignment.assign(color.begin() + 1, color.end());
            return kappa;
        }
    }
    return backtracking_coloring(g, d);
}

VertexSet leaves(const Hypergraph& g) {
    std::vector<int> count(g.vertex_count() + 1, 0);
    for (VertexSet e : g.edges())
        for (int v : set_to_vertices(e)) ++count[v];
    VertexSet out = 0;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (count[v] == 1) out |= singleton(v);
    return out;
}

int diameter(const Hypergraph& g) {
    if (g.degree() != 2 || !g.pure()) fail(Errc::NotAGraph, "diameter needs a pure degree-2 graph");
    int n = g.vertex_count();
    if (g.support() != full_mask(n)) fail(Errc::Disconnected, "isolated vertex");

    std::vector<std::vector<int>> adj(n + 1);
    for (VertexSet e : g.edges()) {
        auto vs = set_to_vertices(e);
        adj[vs[0]].push_back(vs[1]);
        adj[vs[1]].push_back(vs[0]);
    }
    int best = 0;
    std::vector<int> dist(n + 1);
    for (int s = 1; s <= n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    best = std::max(best, dist[w]);
                    q.push(w);
                }
            }
        }
        for (int v = 1; v <= n; ++v)
            if (dist[v] < 0) fail(Errc::Disconnected, "graph is not connected");
    }
    return best;
}

int IntersectionGraph::vertex_degree(int i) const {
    int d = 0;
    for (int w = 0; w < stride(); ++w) d += std::popcount(bits[std::size_t(i) * stride() + w]);
    return d;
}

std::int64_t IntersectionGraph::total_edges() const {
    std::int64_t sum = 0;
    for (int i = 0; i < count; ++i) sum += vertex_degree(i);
    return sum / 2;
}

IntersectionGraph intersection_graph(const Hypergraph& g) {
    IntersectionGraph out;
    out.count = g.edge_count();
    out.bits.assign(std::size_t(out.count) * out.stride(), 0);
    for (int i = 0; i < out.count; ++i) {
        for (int j = i + 1; j < out.count; ++j) {
            if (g.edge(i) & g.edge(j)) {
                out.bits[std::size_t(i) * out.stride() + j / 64] |= std::uint64_t(1) << (j % 64);
                out.bits[std::size_t(j) * out.stride() + i / 64] |= std::uint64_t(1) << (i % 64);
            }
        }
    }
    return out;
}

} // namespace bettilab
