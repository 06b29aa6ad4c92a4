#ifndef BETTILAB_TESTS_ORACLE_HPP
#define BETTILAB_TESTS_ORACLE_HPP

// Reference implementations used only by the tests. Homology is computed the
// long way: enumerate every face, build the boundary matrices with explicit
// alternating signs, and row-reduce with dense Gaussian elimination over
// exact rationals or GF(p). Free trees are enumerated by leaf growth with
// rooted-isomorphism-string deduplication. Nothing here shares code with the
// library beyond the bitmask primitives.

#include "bettilab/homology.hpp"
#include "bettilab/hypergraph.hpp"
#include "bettilab/util.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using bettilab::VertexSet;
using Rational = boost::multiprecision::cpp_rational;

// layers[c] = faces with c vertices, where a face is any subset of w that
// contains no nonface. The empty set is always a face.
inline std::vector<std::vector<VertexSet>> face_layers(VertexSet w,
                                                       const std::vector<VertexSet>& nonfaces) {
    std::vector<std::vector<VertexSet>> layers(std::size_t(bettilab::popcount(w)) + 1);
    for (VertexSet f = 0;; f = (f - w) & w) {
        bool face = true;
        for (VertexSet nf : nonfaces)
            if (bettilab::is_subset(nf, f)) {
                face = false;
                break;
            }
        if (face) layers[std::size_t(bettilab::popcount(f))].push_back(f);
        if (f == w) break;
    }
    return layers;
}

inline int rank_rational(std::vector<std::vector<Rational>> m) {
    if (m.empty() || m[0].empty()) return 0;
    int rows = int(m.size()), cols = int(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[std::size_t(r)][std::size_t(c)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[std::size_t(rank)], m[std::size_t(pivot)]);
        for (int r = rank + 1; r < rows; ++r) {
            Rational& lead = m[std::size_t(r)][std::size_t(c)];
            if (lead == 0) continue;
            Rational factor = lead / m[std::size_t(rank)][std::size_t(c)];
            for (int cc = c; cc < cols; ++cc)
                m[std::size_t(r)][std::size_t(cc)] -=
                    factor * m[std::size_t(rank)][std::size_t(cc)];
        }
        ++rank;
    }
    return rank;
}

inline long long pow_mod(long long base, long long exp, long long p) {
    long long r = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

inline int rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
    if (m.empty() || m[0].empty()) return 0;
    int rows = int(m.size()), cols = int(m[0].size());
    for (auto& row : m)
        for (auto& x : row) {
            x %= p;
            if (x < 0) x += p;
        }
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[std::size_t(r)][std::size_t(c)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[std::size_t(rank)], m[std::size_t(pivot)]);
        long long inv = pow_mod(m[std::size_t(rank)][std::size_t(c)], p - 2, p);
        for (int r = rank + 1; r < rows; ++r) {
            long long lead = m[std::size_t(r)][std::size_t(c)];
            if (lead == 0) continue;
            long long factor = lead * inv % p;
            for (int cc = c; cc < cols; ++cc) {
                long long& x = m[std::size_t(r)][std::size_t(cc)];
                x = (x - factor * m[std::size_t(rank)][std::size_t(cc)]) % p;
                if (x < 0) x += p;
            }
        }
        ++rank;
    }
    return rank;
}

// Boundary from faces of cardinality c to cardinality c-1: the face F maps to
// the alternating sum over v in F (in increasing vertex order) of F - {v}.
inline std::vector<std::vector<int>> boundary_matrix(const std::vector<VertexSet>& from,
                                                     const std::vector<VertexSet>& to) {
    std::map<VertexSet, int> row;
    for (std::size_t i = 0; i < to.size(); ++i) row[to[i]] = int(i);
    std::vector<std::vector<int>> m(to.size(), std::vector<int>(from.size(), 0));
    for (std::size_t j = 0; j < from.size(); ++j) {
        int pos = 0;
        for (VertexSet rest = from[j]; rest; rest &= rest - 1) {
            VertexSet removed = from[j] ^ (rest & -rest);
            m[std::size_t(row.at(removed))][j] = (pos % 2 == 0) ? 1 : -1;
            ++pos;
        }
    }
    return m;
}

inline int boundary_rank(const std::vector<std::vector<int>>& m, const bettilab::FieldSpec& field) {
    if (field.is_rational()) {
        std::vector<std::vector<Rational>> q(m.size());
        for (std::size_t r = 0; r < m.size(); ++r) q[r].assign(m[r].begin(), m[r].end());
        return rank_rational(std::move(q));
    }
    std::vector<std::vector<long long>> q(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) q[r].assign(m[r].begin(), m[r].end());
    return rank_mod_p(std::move(q), field.characteristic);
}

// All reduced Betti numbers of the complex on w with the given minimal
// nonfaces; only nonzero entries appear. dims[p] uses chain groups indexed by
// cardinality: C_p is spanned by the faces with p+1 vertices.
inline std::map<int, std::int64_t> reduced_betti(VertexSet w, const std::vector<VertexSet>& nonfaces,
                                                 const bettilab::FieldSpec& field) {
    auto layers = face_layers(w, nonfaces);
    int maxc = int(layers.size()) - 1;
    std::vector<int> ranks(std::size_t(maxc) + 2, 0);
    for (int c = 1; c <= maxc; ++c)
        ranks[std::size_t(c)] =
            boundary_rank(boundary_matrix(layers[std::size_t(c)], layers[std::size_t(c) - 1]), field);
    std::map<int, std::int64_t> out;
    for (int p = -1; p + 1 <= maxc; ++p) {
        std::int64_t dim = std::int64_t(layers[std::size_t(p) + 1].size());
        std::int64_t b = dim - ranks[std::size_t(p) + 1] -
                         (p + 2 <= maxc ? ranks[std::size_t(p) + 2] : 0);
        if (b != 0) out[p] = b;
    }
    return out;
}

inline std::map<int, std::int64_t> reduced_betti(const bettilab::SimplicialComplexView& k,
                                                 const bettilab::FieldSpec& field) {
    return reduced_betti(k.vertices, k.minimal_nonfaces, field);
}

// Hochster sum: beta_{i,a} = sum over |W| = a of dim H~_{a-i-2} of the
// complex induced on W, nonfaces taken straight from the edge list.
inline std::int64_t hochster(const bettilab::Hypergraph& g, int i, int a,
                             const bettilab::FieldSpec& field) {
    int n = g.vertex_count();
    if (a < 0 || a > n || i < 0) return 0;
    std::int64_t total = 0;
    VertexSet limit = bettilab::full_mask(n);
    for (VertexSet w = 0;; ++w) {
        if (bettilab::popcount(w) == a) {
            auto prof = reduced_betti(w, g.edges(), field);
            auto it = prof.find(a - i - 2);
            if (it != prof.end()) total += it->second;
        }
        if (w == limit) break;
    }
    return total;
}

// Full graded table assembled from one homology profile per subset.
inline std::map<std::pair<int, int>, std::int64_t> betti_table(const bettilab::Hypergraph& g,
                                                               const bettilab::FieldSpec& field) {
    std::map<std::pair<int, int>, std::int64_t> entries;
    VertexSet limit = bettilab::full_mask(g.vertex_count());
    for (VertexSet w = 0;; ++w) {
        int a = bettilab::popcount(w);
        for (const auto& [p, dim] : reduced_betti(w, g.edges(), field)) {
            int i = a - p - 2;
            if (i >= 0) entries[{i, a}] += dim;
        }
        if (w == limit) break;
    }
    return entries;
}

// --- free trees --------------------------------------------------------------

// Vertices 0..n-1; always connected and acyclic by construction.
struct LabeledTree {
    int n = 1;
    std::vector<std::pair<int, int>> edges;
};

inline std::string ahu_rooted(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> kids;
    for (int u : adj[std::size_t(v)])
        if (u != parent) kids.push_back(ahu_rooted(adj, u, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    s += ")";
    return s;
}

inline std::string tree_key(const LabeledTree& t) {
    std::vector<std::vector<int>> adj(std::size_t(t.n));
    for (auto [a, b] : t.edges) {
        adj[std::size_t(a)].push_back(b);
        adj[std::size_t(b)].push_back(a);
    }
    std::string best;
    for (int root = 0; root < t.n; ++root) {
        std::string s = ahu_rooted(adj, root, -1);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

// by_n[n] = one representative per isomorphism class of free trees on n
// vertices, grown by attaching a leaf everywhere on the (n-1)-vertex trees.
inline std::vector<std::vector<LabeledTree>> free_trees_up_to(int nmax) {
    std::vector<std::vector<LabeledTree>> by_n(std::size_t(nmax) + 1);
    if (nmax >= 1) by_n[1].push_back(LabeledTree{});
    for (int n = 2; n <= nmax; ++n) {
        std::set<std::string> seen;
        for (const auto& t : by_n[std::size_t(n) - 1])
            for (int v = 0; v < t.n; ++v) {
                LabeledTree child{n, t.edges};
                child.edges.emplace_back(v, n - 1);
                if (seen.insert(tree_key(child)).second) by_n[std::size_t(n)].push_back(child);
            }
    }
    return by_n;
}

inline bettilab::Hypergraph to_hypergraph(const LabeledTree& t) {
    std::vector<std::vector<int>> edges;
    edges.reserve(t.edges.size());
    for (auto [a, b] : t.edges) edges.push_back({a + 1, b + 1});
    return bettilab::make_hypergraph(t.n, edges);
}

} // namespace oracle

#endif
