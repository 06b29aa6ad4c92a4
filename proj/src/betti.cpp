#include "bettilab/betti.hpp"

#include <algorithm>
#include <unordered_map>

namespace bettilab {

namespace {

// Shifted homology profile of one complex: s[k] = reduced Betti number in
// dimension k-1. Under this indexing the join of two complexes multiplies
// profiles as polynomials, and {∅} is the identity [1]. An empty vector is
// identically zero.
using Profile = std::vector<std::int64_t>;

Profile convolve(const Profile& a, const Profile& b) {
    if (a.empty() || b.empty()) return {};
    Profile out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Profile profile_of_map(const HomologyProfile& dims) {
    Profile s;
    for (const auto& [p, v] : dims) {
        if (int(s.size()) <= p + 1) s.resize(p + 2, 0);
        s[p + 1] = v;
    }
    return s;
}

// Per-worker Hochster evaluator. Restricting the ideal's complex to a closed
// subset W (W = union of the edges inside it) splits it as a join over the
// connected components of those edges, so profiles multiply; component
// profiles are memoized by vertex mask.
struct Engine {
    const Hypergraph& g;
    FieldSpec field;
    HomologyOptions hopts;
    std::unordered_map<VertexSet, Profile> memo;

    Engine(const Hypergraph& graph, const FieldSpec& f, const HomologyOptions& h)
        : g(graph), field(f), hopts(h) {}

    Profile component_profile(VertexSet c) {
        auto it = memo.find(c);
        if (it != memo.end()) return it->second;
        SimplicialComplexView k;
        k.n = g.vertex_count();
        k.vertices = c;
        for (VertexSet e : g.edges())
            if (is_subset(e, c)) k.minimal_nonfaces.push_back(e);
        Profile s = profile_of_map(reduced_betti_all(k, field, hopts));
        memo.emplace(c, s);
        return s;
    }

    Profile closed_profile(VertexSet w) {
        if (w == 0) return {1};
        std::vector<VertexSet> inside;
        for (VertexSet e : g.edges())
            if (is_subset(e, w)) inside.push_back(e);

        Profile total{1};
        VertexSet left = w;
        while (left) {
            VertexSet comp = 0;
            VertexSet seed = left & (~left + 1);
            comp = seed;
            bool grew = true;
            while (grew) {
                grew = false;
                for (VertexSet e : inside) {
                    if ((e & comp) && !is_subset(e, comp)) {
                        comp |= e;
                        grew = true;
                    }
                }
            }
            total = convolve(total, component_profile(comp));
            if (total.empty()) return total;
            left &= ~comp;
        }
        return total;
    }
};

VertexSet closure_union(const Hypergraph& g, VertexSet w) {
    VertexSet u = 0;
    for (VertexSet e : g.edges())
        if (is_subset(e, w)) u |= e;
    return u;
}

void add_profile(std::map<std::pair<int, int>, std::int64_t>& entries, const Profile& s, int a) {
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == 0) continue;
        int i = a - int(k) - 1;
        if (i >= 0) entries[{i, a}] += s[k];
    }
}

// Brute Hochster profile without closure/component shortcuts, for the
// pruning-neutrality differential path.
Profile brute_profile(const Hypergraph& g, VertexSet w, const FieldSpec& field,
                      const HomologyOptions& hopts) {
    SimplicialComplexView k = SimplicialComplexView::of(g).induced(w);
    return profile_of_map(reduced_betti_all(k, field, hopts));
}

} // namespace

std::int64_t hochster_graded_betti(const Hypergraph& g, int i, int a, const FieldSpec& field,
                                   const BettiOptions& opts) {
    int n = g.vertex_count();
    if (i < 0 || a < 0 || a > n) return 0;
    if (a - i - 2 < -1) return 0;

    std::size_t k = std::size_t(a) - std::size_t(i) - 1; // profile slot for dim a-i-2
    std::int64_t count = binomial(n, a);
    if (count > (std::int64_t(1) << 28))
        fail(Errc::TooLarge, "C(" + std::to_string(n) + "," + std::to_string(a) +
                                 ") subsets exceed the enumeration cap");
    std::vector<std::int64_t> partial(std::size_t(effective_thread_count()), 0);
    parallel_chunks(count, [&](int chunk, std::int64_t lo, std::int64_t hi) {
        Engine engine(g, field, opts.homology);
        std::int64_t sum = 0;
        VertexSet w = unrank_subset(n, a, lo);
        for (std::int64_t r = lo; r < hi; ++r) {
            if (opts.cone_pruning) {
                if (closure_union(g, w) == w) {
                    Profile s = engine.closed_profile(w);
                    if (k < s.size()) sum += s[k];
                }
            } else {
                Profile s = brute_profile(g, w, field, opts.homology);
                if (k < s.size()) sum += s[k];
            }
            w = next_same_popcount(w);
        }
        partial[std::size_t(chunk)] += sum;
    });

    std::int64_t total = 0;
    for (std::int64_t v : partial) total += v;
    return total;
}

BettiTable betti_table(const Hypergraph& g, const FieldSpec& field, const BettiOptions& opts) {
    int n = g.vertex_count();
    if (n > opts.max_vertices)
        fail(Errc::TooManyVertices,
             std::to_string(n) + " vertices exceeds the table cap " +
                 std::to_string(opts.max_vertices));

    std::size_t workers = static_cast<std::size_t>(effective_thread_count());
    std::vector<std::map<std::pair<int, int>, std::int64_t>> partial(workers);
    std::int64_t count = std::int64_t(1) << n;
    parallel_chunks(count, [&](int chunk, std::int64_t lo, std::int64_t hi) {
        Engine engine(g, field, opts.homology);
        auto& local = partial[std::size_t(chunk)];
        for (std::int64_t m = lo; m < hi; ++m) {
            VertexSet w = VertexSet(m);
            if (opts.cone_pruning) {
                if (closure_union(g, w) != w) continue;
                add_profile(local, engine.closed_profile(w), popcount(w));
            } else {
                add_profile(local, brute_profile(g, w, field, opts.homology), popcount(w));
            }
        }
    });

    BettiTable table;
    table.kind = BettiTable::Kind::Minimal;
    table.field = field;
    for (const auto& local : partial)
        for (const auto& [ia, v] : local) table.entries[ia] += v;
    return table;
}

std::vector<std::int64_t> total_betti(const BettiTable& table) {
    int top = table.max_index();
    std::vector<std::int64_t> out(std::size_t(top + 1), 0);
    for (const auto& [ia, v] : table.entries) out[std::size_t(ia.first)] += v;
    return out;
}

std::int64_t taylor_graded_betti(const Hypergraph& g, int i, int j, const BettiOptions&) {
    int t = g.edge_count();
    if (i < 0 || i + 1 > t) return 0;
    std::int64_t subsets = binomial(t, i + 1);
    if (subsets > (std::int64_t(1) << 26))
        fail(Errc::TooManyEdges, "C(" + std::to_string(t) + "," + std::to_string(i + 1) +
                                     ") generator subsets exceed the enumeration cap");

    std::int64_t total = 0;
    std::uint64_t mask = (std::uint64_t(1) << (i + 1)) - 1;
    for (std::int64_t r = 0; r < subsets; ++r) {
        VertexSet u = 0;
        std::uint64_t m = mask;
        while (m) {
            u |= g.edge(std::countr_zero(m));
            m &= m - 1;
        }
        if (popcount(u) == j) ++total;
        mask = next_same_popcount(mask);
    }
    return total;
}

BettiTable taylor_table(const Hypergraph& g, const BettiOptions& opts) {
    int t = g.edge_count();
    if (t > opts.max_edges)
        fail(Errc::TooManyEdges, std::to_string(t) + " generators exceeds the Taylor cap " +
                                     std::to_string(opts.max_edges));
    BettiTable table;
    table.kind = BettiTable::Kind::Taylor;

    auto rec = [&](auto&& self, int next, int size, VertexSet u) -> void {
        if (size > 0) table.entries[{size - 1, popcount(u)}] += 1;
        for (int e = next; e < t; ++e) self(self, e + 1, size + 1, u | g.edge(e));
    };
    rec(rec, 0, 0, 0);
    return table;
}

std::int64_t taylor_beta2_3dm1(const Hypergraph& g) {
    if (!g.pure()) fail(Errc::NotPure, "triple count needs a pure hypergraph");
    int t = g.edge_count();
    std::int64_t ordered = 0;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (j == i || (g.edge(i) & g.edge(j))) continue;
            for (int k = 0; k < t; ++k) {
                if (k == i || k == j) continue;
                if (g.edge(i) & g.edge(k)) continue;
                if (popcount(g.edge(j) & g.edge(k)) == 1) ++ordered;
            }
        }
    return ordered / 2;
}

Report euler_consistency(const Hypergraph& g, const FieldSpec& field, const BettiOptions& opts) {
    BettiTable minimal = betti_table(g, field, opts);
    BettiTable taylor = taylor_table(g, opts);

    std::map<int, std::int64_t> alt_min, alt_tay;
    for (const auto& [ia, v] : minimal.entries)
        alt_min[ia.second] += (ia.first % 2 == 0 ? v : -v);
    for (const auto& [ia, v] : taylor.entries)
        alt_tay[ia.second] += (ia.first % 2 == 0 ? v : -v);

    Report report;
    report.id = "euler_consistency";
    std::vector<int> degrees;
    for (const auto& [a, v] : alt_min) degrees.push_back(a);
    for (const auto& [a, v] : alt_tay)
        if (!alt_min.count(a)) degrees.push_back(a);
    std::sort(degrees.begin(), degrees.end());

    for (int a : degrees) {
        std::int64_t m = alt_min.count(a) ? alt_min[a] : 0;
        std::int64_t ty = alt_tay.count(a) ? alt_tay[a] : 0;
        Comparison c;
        c.label = "a=" + std::to_string(a);
        c.bound = ty;
        c.computed = m;
        c.verdict = (m == ty) ? Verdict::HoldsWithEquality : Verdict::Violated;
        if (c.verdict == Verdict::Violated)
            report.details.push_back("alternating sums differ at degree " + std::to_string(a));
        report.comparisons.push_back(std::move(c));
    }
    return report;
}

} // namespace bettilab
