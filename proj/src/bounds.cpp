#include "bettilab/bounds.hpp"

#include <algorithm>

namespace bettilab {

NearlyEvenPartition nearly_even_partition(int r, int d) {
    if (d <= 0) fail(Errc::ZeroParts, "partition needs at least one part");
    if (r < 0) fail(Errc::BadParams, "cannot partition a negative total");
    NearlyEvenPartition p;
    int q = r / d, rem = r % d;
    for (int i = 0; i < d; ++i) p.parts.push_back(i < rem ? q + 1 : q);
    p.has_zero_parts = (q == 0);
    return p;
}

std::int64_t tree_lb_value(const std::vector<int>& class_sizes, int j) {
    std::int64_t sum = 0;
    for (int n : class_sizes) sum += binomial(n, j);
    return sum;
}

std::int64_t forest_lb_value(int t, int d, int j) {
    NearlyEvenPartition p = nearly_even_partition(t + d - 1, d);
    return tree_lb_value(p.parts, j);
}

std::int64_t beta35_value(int t) {
    NearlyEvenPartition p = nearly_even_partition(t, 2);
    return binomial(t, 3) - binomial(p.parts[0], 3) - binomial(p.parts[1], 3);
}

std::int64_t b36_value(int t) {
    NearlyEvenPartition p = nearly_even_partition(t, 3);
    std::int64_t v = binomial(t, 3);
    for (int part : p.parts) v -= binomial(part, 3);
    return v;
}

std::int64_t bound_value(const std::string& theorem, const std::vector<std::int64_t>& params) {
    auto as_int = [](std::int64_t v) {
        if (v < 0 || v > 1'000'000) fail(Errc::BadParams, "parameter out of range");
        return int(v);
    };
    if (theorem == "tree_lb") {
        if (params.size() < 2) fail(Errc::BadParams, "tree_lb needs class sizes then j");
        std::vector<int> sizes;
        for (std::size_t i = 0; i + 1 < params.size(); ++i) sizes.push_back(as_int(params[i]));
        return tree_lb_value(sizes, as_int(params.back()));
    }
    if (theorem == "forest_lb") {
        if (params.size() != 3) fail(Errc::BadParams, "forest_lb needs (t, d, j)");
        return forest_lb_value(as_int(params[0]), as_int(params[1]), as_int(params[2]));
    }
    if (theorem == "beta35") {
        if (params.size() != 1) fail(Errc::BadParams, "beta35 needs (t)");
        return beta35_value(as_int(params[0]));
    }
    if (theorem == "b36") {
        if (params.size() != 1) fail(Errc::BadParams, "b36 needs (t)");
        return b36_value(as_int(params[0]));
    }
    fail(Errc::BadParams, "unknown theorem id \"" + theorem + "\"");
}

namespace {

std::int64_t total_at(const std::vector<std::int64_t>& totals, int i) {
    return (i >= 0 && i < int(totals.size())) ? totals[std::size_t(i)] : 0;
}

void compare_lower_bounds(Report& report, const std::vector<int>& parts,
                          const std::vector<std::int64_t>& totals) {
    int jmax = 0;
    for (int p : parts) jmax = std::max(jmax, p);
    for (int j = 2; j <= jmax; ++j) {
        Comparison c;
        c.label = "j=" + std::to_string(j);
        c.bound = tree_lb_value(parts, j);
        c.computed = total_at(totals, j - 1);
        c.verdict = lower_bound_verdict(c.bound, c.computed);
        report.comparisons.push_back(std::move(c));
    }
}

std::vector<int> coloring_class_sizes(const Hypergraph& g, int d) {
    auto kappa = proper_coloring(g, d);
    if (!kappa)
        fail(Errc::NotColorable,
             "no proper " + std::to_string(d) + "-coloring; the bound is vacuous here");
    std::vector<int> sizes;
    for (int c = 1; c <= d; ++c) sizes.push_back(popcount(kappa->color_class(c)));
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    return sizes;
}

std::string join_ints(const std::vector<int>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i]);
    }
    return s;
}

Report verify_tree_lb(const Hypergraph& g, const FieldSpec& field, const BettiOptions& opts) {
    Report report;
    report.id = "tree_lb";
    if (g.edge_count() == 0) {
        report.details.push_back("no generators; nothing to bound");
        return report;
    }
    if (g.support() != full_mask(g.vertex_count()))
        fail(Errc::NotAHypertree, "every vertex must lie in an edge");
    if (!tree_ordering(g)) fail(Errc::NotAHypertree, "no tree ordering exists");
    std::vector<int> sizes = coloring_class_sizes(g, g.degree());
    report.details.push_back("color classes " + join_ints(sizes));
    compare_lower_bounds(report, sizes, total_betti(betti_table(g, field, opts)));
    return report;
}

Report verify_forest_lb(const Hypergraph& g, const FieldSpec& field, const BettiOptions& opts) {
    Report report;
    report.id = "forest_lb";
    if (g.edge_count() == 0) {
        report.details.push_back("no generators; nothing to bound");
        return report;
    }
    if (!forest_ordering(g)) fail(Errc::NotAHyperforest, "no forest ordering exists");
    int t = g.edge_count(), d = g.degree();
    NearlyEvenPartition p = nearly_even_partition(t + d - 1, d);
    report.details.push_back("nearly even partition of t+d-1: " + join_ints(p.parts));
    compare_lower_bounds(report, p.parts, total_betti(betti_table(g, field, opts)));
    return report;
}

Report verify_diameter_eq(const Hypergraph& g, const FieldSpec& field, const BettiOptions& opts) {
    Report report;
    report.id = "diameter_eq";
    int diam = diameter(g);
    if (!tree_ordering(g)) fail(Errc::NotAHypertree, "graph has a cycle");
    std::vector<int> sizes = coloring_class_sizes(g, 2);
    report.details.push_back("diameter " + std::to_string(diam));
    report.details.push_back("color classes " + join_ints(sizes));
    compare_lower_bounds(report, sizes, total_betti(betti_table(g, field, opts)));

    bool all_equal = true;
    for (const auto& c : report.comparisons)
        if (c.verdict != Verdict::HoldsWithEquality) all_equal = false;
    bool consistent = (diam <= 4) == all_equal;
    Comparison b;
    b.label = "biconditional";
    b.bound = diam <= 4 ? 1 : 0;
    b.computed = all_equal ? 1 : 0;
    b.verdict = consistent ? Verdict::HoldsWithEquality : Verdict::Violated;
    if (!consistent)
        report.details.push_back(diam <= 4 ? "diameter <= 4 but some j is strict"
                                           : "diameter > 4 yet equality at every j");
    report.comparisons.push_back(std::move(b));
    return report;
}

Report verify_beta35(const Hypergraph& g, const FieldSpec& field, const BettiOptions& opts) {
    Report report;
    report.id = "beta35";
    if (!g.pure()) fail(Errc::NotPure, "the bound needs a pure hypergraph");
    int t = g.edge_count(), d = g.degree();

    Comparison main;
    main.label = "beta_{2," + std::to_string(3 * d - 1) + "} <= C(t,3)-C(t1,3)-C(t2,3)";
    main.bound = beta35_value(t);
    main.computed = hochster_graded_betti(g, 2, 3 * d - 1, field, opts);
    main.verdict = upper_bound_verdict(main.bound, main.computed);
    report.comparisons.push_back(main);

    if (t > 0) {
        std::int64_t taylor = taylor_graded_betti(g, 2, 3 * d - 1, opts);
        IntersectionGraph gp = intersection_graph(g);
        std::int64_t pg = p_count(gp);
        std::int64_t m = gp.total_edges();

        Comparison dom;
        dom.label = "minimal <= taylor";
        dom.bound = taylor;
        dom.computed = main.computed;
        dom.verdict = upper_bound_verdict(dom.bound, dom.computed);
        report.comparisons.push_back(std::move(dom));

        Comparison link1;
        link1.label = "taylor <= P(G')";
        link1.bound = pg;
        link1.computed = taylor;
        link1.verdict = upper_bound_verdict(link1.bound, link1.computed);
        report.comparisons.push_back(std::move(link1));

        // P <= t*abar*(t-1-abar)/2 with abar = 2m/t, cleared of denominators:
        // P*t <= m*(t-1)*t - 2*m^2.
        Comparison link2;
        link2.label = "P(G')*t <= m*(t-1)*t - 2*m^2";
        link2.bound = m * std::int64_t(t - 1) * t - 2 * m * m;
        link2.computed = pg * t;
        link2.verdict = upper_bound_verdict(link2.bound, link2.computed);
        report.comparisons.push_back(std::move(link2));
    }
    return report;
}

Report verify_b36(const Hypergraph& g, const FieldSpec& field, const BettiOptions& opts) {
    Report report;
    report.id = "b36";
    if (!g.pure()) fail(Errc::NotPure, "the conjecture is about pure degree-3 ideals");
    if (g.edge_count() > 0 && g.degree() != 3)
        fail(Errc::BadParams, "the conjecture is about degree-3 ideals");
    int t = g.edge_count();

    Comparison main;
    main.label = "beta_{2,6} <= C(t,3)-C(t1,3)-C(t2,3)-C(t3,3)";
    main.bound = b36_value(t);
    main.computed = hochster_graded_betti(g, 2, 6, field, opts);
    main.verdict = upper_bound_verdict(main.bound, main.computed);
    report.comparisons.push_back(main);
    report.details.push_back("conjecture evidence only, not a theorem");

    if (t <= 12) {
        int turan = turan_number(t, 7, 3);
        report.details.push_back("informational: C(t,3)-T(t,7,3) = " +
                                 std::to_string(binomial(t, 3) - turan));
    }
    return report;
}

} // namespace

Report verify_bound(const std::string& theorem, const Hypergraph& g, const FieldSpec& field,
                    const BettiOptions& opts) {
    if (theorem == "tree_lb") return verify_tree_lb(g, field, opts);
    if (theorem == "forest_lb") return verify_forest_lb(g, field, opts);
    if (theorem == "diameter_eq") return verify_diameter_eq(g, field, opts);
    if (theorem == "beta35") return verify_beta35(g, field, opts);
    if (theorem == "b36") return verify_b36(g, field, opts);
    fail(Errc::BadParams, "unknown theorem id \"" + theorem + "\"");
}

namespace {

std::vector<VertexSet> minimalized(std::vector<VertexSet> edges) {
    std::sort(edges.begin(), edges.end(), canonical_edge_less);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<VertexSet> kept;
    for (VertexSet e : edges) {
        bool dominated = false;
        for (VertexSet f : kept)
            if (is_subset(f, e)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(e);
    }
    return kept;
}

} // namespace

WitnessSubset witness_subset(const Hypergraph& g, const Coloring& kappa, int blue,
                             VertexSet b_prime, const FieldSpec& field) {
    int n = g.vertex_count();
    if (g.support() != full_mask(n)) fail(Errc::NotAHypertree, "every vertex must lie in an edge");
    if (!tree_ordering(g)) fail(Errc::NotAHypertree, "no tree ordering exists");
    if (kappa.colors != g.degree() || !is_proper_coloring(g, kappa))
        fail(Errc::ImproperColoring, "need a proper coloring with degree(G) colors");
    if (blue < 1 || blue > kappa.colors) fail(Errc::BadParams, "no such color class");
    VertexSet bclass = kappa.color_class(blue);
    if (b_prime == 0 || !is_subset(b_prime, bclass))
        fail(Errc::BadParams, "B' must be a nonempty subset of the blue class");
    if (g.edge_count() == 1)
        fail(Errc::NotApplicable, "single-edge base case: the induction starts above it");

    VertexSet u = full_mask(n) & ~(bclass & ~b_prime);
    std::vector<VertexSet> edges;
    for (VertexSet e : g.edges())
        if (is_subset(e, u)) edges.push_back(e);
    std::vector<int> w;

    auto check_invariants = [&]() {
        VertexSet covered = 0;
        for (VertexSet e : edges) {
            if (e == 0 || (e & b_prime) == 0)
                fail(Errc::WitnessCheckFailed, "an edge lost its blue vertex");
            covered |= e;
        }
        if (!is_subset(b_prime, covered))
            fail(Errc::WitnessCheckFailed, "a blue vertex lost all its edges");
    };

    auto has_edge_avoiding = [&](int v, int avoid) {
        for (VertexSet e : edges)
            if (contains(e, v) && !contains(e, avoid)) return true;
        return false;
    };

    while (true) {
        check_invariants();
        if ((u & ~b_prime) == 0) break;

        // Step 1 to exhaustion: delete (antistar) the smallest non-blue u
        // every blue vertex can keep an edge without.
        bool removed = true;
        while (removed) {
            removed = false;
            for (int cand : set_to_vertices(u & ~b_prime)) {
                bool ok = true;
                for (int v : set_to_vertices(b_prime)) {
                    if (!has_edge_avoiding(v, cand)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                u &= ~singleton(cand);
                std::vector<VertexSet> next;
                for (VertexSet e : edges)
                    if (!contains(e, cand)) next.push_back(e);
                edges = std::move(next);
                removed = true;
                break;
            }
        }
        if ((u & ~b_prime) == 0) break;

        // Step 2: the smallest non-blue u that every edge of some blue
        // vertex passes through; take the link and record u.
        int pick = -1;
        for (int cand : set_to_vertices(u & ~b_prime)) {
            for (int v : set_to_vertices(b_prime)) {
                bool pinned = true;
                for (VertexSet e : edges)
                    if (contains(e, v) && !contains(e, cand)) {
                        pinned = false;
                        break;
                    }
                if (pinned) {
                    pick = cand;
                    break;
                }
            }
            if (pick >= 0) break;
        }
        if (pick < 0)
            fail(Errc::WitnessCheckFailed, "Step 2 found no deletable vertex");

        w.push_back(pick);
        u &= ~singleton(pick);
        std::vector<VertexSet> moved;
        for (VertexSet e : edges) {
            VertexSet e2 = e & ~singleton(pick);
            if (e2 == 0) fail(Errc::WitnessCheckFailed, "link produced an empty edge");
            moved.push_back(e2);
        }
        edges = minimalized(std::move(moved));
        VertexSet covered = 0;
        for (VertexSet e : edges) covered |= e;
        if (!is_subset(b_prime, covered))
            fail(Errc::WitnessCheckFailed, "a blue vertex lost all its edges");
        u &= covered;
        u |= b_prime;
    }

    if (u != b_prime) fail(Errc::WitnessCheckFailed, "non-blue vertices survived");

    WitnessSubset out;
    out.b_prime = b_prime;
    out.deleted = w;
    out.u_prime = b_prime | vertices_to_set(w);
    out.homology_degree = popcount(out.u_prime) - popcount(b_prime) - 1;

    SimplicialComplexView check = SimplicialComplexView::of(g).induced(out.u_prime);
    if (reduced_betti(check, out.homology_degree, field) < 1)
        fail(Errc::WitnessCheckFailed,
             "homology vanished in degree " + std::to_string(out.homology_degree));
    return out;
}

std::int64_t p_count(const IntersectionGraph& gp) {
    std::int64_t count = 0;
    for (int i = 0; i < gp.count; ++i)
        for (int j = i + 1; j < gp.count; ++j)
            for (int k = j + 1; k < gp.count; ++k) {
                int edges = int(gp.adjacent(i, j)) + int(gp.adjacent(i, k)) +
                            int(gp.adjacent(j, k));
                if (edges == 1) ++count;
            }
    return count;
}

namespace {

bool turan_cover_dfs(const std::vector<std::uint64_t>& ksets, std::vector<std::uint64_t>& chosen,
                     int remaining, int l) {
    std::uint64_t uncovered = 0;
    bool found = false;
    for (std::uint64_t k : ksets) {
        bool hit = false;
        for (std::uint64_t c : chosen)
            if ((c & ~k) == 0) {
                hit = true;
                break;
            }
        if (!hit) {
            uncovered = k;
            found = true;
            break;
        }
    }
    if (!found) return true;
    if (remaining == 0) return false;

    std::uint64_t sub = (std::uint64_t(1) << l) - 1;
    std::vector<int> bits;
    for (int b = 0; b < 64; ++b)
        if ((uncovered >> b) & 1u) bits.push_back(b);
    int kk = int(bits.size());
    std::int64_t options = binomial(kk, l);
    for (std::int64_t r = 0; r < options; ++r) {
        std::uint64_t c = 0;
        std::uint64_t m = sub;
        while (m) {
            c |= std::uint64_t(1) << bits[std::countr_zero(m)];
            m &= m - 1;
        }
        chosen.push_back(c);
        if (turan_cover_dfs(ksets, chosen, remaining - 1, l)) return true;
        chosen.pop_back();
        sub = next_same_popcount(sub);
    }
    return false;
}

} // namespace

int turan_number(int n, int k, int l) {
    if (n < 0 || n > 12) fail(Errc::TooLarge, "brute-force scale is n <= 12");
    if (l < 1 || k < l) fail(Errc::BadParams, "need 1 <= l <= k");
    if (k > n) return 0;

    std::vector<std::uint64_t> ksets;
    std::uint64_t mask = (std::uint64_t(1) << k) - 1;
    std::int64_t count = binomial(n, k);
    for (std::int64_t r = 0; r < count; ++r) {
        ksets.push_back(mask);
        mask = next_same_popcount(mask);
    }

    for (int s = 0;; ++s) {
        std::vector<std::uint64_t> chosen;
        if (turan_cover_dfs(ksets, chosen, s, l)) return s;
    }
}

} // namespace bettilab
