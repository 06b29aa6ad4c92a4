#include "bettilab/atlas.hpp"

#include "bettilab/bounds.hpp"
#include "bettilab/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace bettilab {

namespace {

Hypergraph from_masks(int n, std::vector<VertexSet> edges) {
    return make_hypergraph(n, std::move(edges));
}

std::string edges_to_string(const Hypergraph& g) {
    std::ostringstream out;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i) out << ' ';
        out << '{';
        bool first = true;
        for (int v : g.edge_vertices(i)) {
            if (!first) out << ',';
            out << v;
            first = false;
        }
        out << '}';
    }
    if (g.edge_count() == 0) out << "{}";
    return out.str();
}

int checked_param(const FamilySpec& spec, std::size_t index) {
    if (index >= spec.params.size())
        fail(Errc::BadParams, "family '" + spec.family + "' is missing parameter " +
                                  std::to_string(index + 1));
    return spec.params[index];
}

} // namespace

Hypergraph gen_extremal_hypertree(int d, const std::vector<int>& class_sizes) {
    if (d < 1) fail(Errc::BadParams, "extremal_hypertree needs d >= 1");
    if (static_cast<int>(class_sizes.size()) != d)
        fail(Errc::BadParams, "extremal_hypertree needs exactly d class sizes");
    for (int s : class_sizes)
        if (s < 1) fail(Errc::BadParams, "extremal_hypertree class sizes must be >= 1");

    VertexSet base = 0;
    for (int v = 1; v <= d; ++v) base |= singleton(v);
    std::vector<VertexSet> edges{base};
    int next = d + 1;
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j < class_sizes[i - 1]; ++j) {
            edges.push_back((base & ~singleton(i)) | singleton(next));
            ++next;
        }
    }
    return from_masks(next - 1, std::move(edges));
}

Hypergraph gen_path(int n) {
    if (n < 1) fail(Errc::BadParams, "path needs n >= 1");
    std::vector<VertexSet> edges;
    for (int v = 1; v < n; ++v) edges.push_back(singleton(v) | singleton(v + 1));
    return from_masks(n, std::move(edges));
}

Hypergraph gen_beta35_extremal(int t1, int t2) {
    if (t1 < 1 || t2 < 1) fail(Errc::BadParams, "beta35_extremal needs t1, t2 >= 1");
    std::vector<VertexSet> edges;
    for (int i = 1; i <= t1; ++i) edges.push_back(singleton(1) | singleton(2 + i));
    for (int j = 1; j <= t2; ++j) edges.push_back(singleton(2) | singleton(2 + t1 + j));
    return from_masks(2 + t1 + t2, std::move(edges));
}

Hypergraph gen_taylor_equality(int d, int r, int t) {
    if (d < 2 || r < 1 || r >= d || t < 1)
        fail(Errc::BadParams, "taylor_equality needs d >= 2, 1 <= r < d, t >= 1");
    VertexSet shared = 0;
    for (int v = 1; v <= d - r; ++v) shared |= singleton(v);
    std::vector<VertexSet> edges;
    for (int a = 0; a < t; ++a) {
        VertexSet block = 0;
        for (int j = 1; j <= r; ++j) block |= singleton(d - r + a * r + j);
        edges.push_back(shared | block);
    }
    return from_masks(d - r + t * r, std::move(edges));
}

Hypergraph gen_degree3_unique() {
    return from_masks(9, {singleton(1) | singleton(2) | singleton(4),
                          singleton(1) | singleton(2) | singleton(5),
                          singleton(1) | singleton(3) | singleton(6),
                          singleton(1) | singleton(3) | singleton(7),
                          singleton(2) | singleton(3) | singleton(8),
                          singleton(2) | singleton(3) | singleton(9)});
}

Hypergraph gen_b36_extremal(int t1, int t2, int t3) {
    if (t1 < 0 || t2 < 0 || t3 < 0 || t1 + t2 + t3 < 1)
        fail(Errc::BadParams, "b36_extremal needs nonnegative block sizes, at least one positive");
    std::vector<VertexSet> edges;
    int next = 4;
    for (int i = 0; i < t1; ++i) edges.push_back(singleton(1) | singleton(2) | singleton(next++));
    for (int i = 0; i < t2; ++i) edges.push_back(singleton(1) | singleton(3) | singleton(next++));
    for (int i = 0; i < t3; ++i) edges.push_back(singleton(2) | singleton(3) | singleton(next++));
    return from_masks(next - 1, std::move(edges));
}

Hypergraph generate(const FamilySpec& spec) {
    const std::string& f = spec.family;
    auto expect = [&](std::size_t count) {
        if (spec.params.size() != count)
            fail(Errc::BadParams, "family '" + f + "' takes " + std::to_string(count) +
                                      " parameter(s), got " + std::to_string(spec.params.size()));
    };
    if (f == "extremal_hypertree") {
        int d = checked_param(spec, 0);
        if (d < 1) fail(Errc::BadParams, "extremal_hypertree needs d >= 1");
        expect(static_cast<std::size_t>(d) + 1);
        return gen_extremal_hypertree(d, {spec.params.begin() + 1, spec.params.end()});
    }
    if (f == "path") {
        expect(1);
        return gen_path(spec.params[0]);
    }
    if (f == "beta35_extremal") {
        expect(2);
        return gen_beta35_extremal(spec.params[0], spec.params[1]);
    }
    if (f == "taylor_equality") {
        expect(3);
        return gen_taylor_equality(spec.params[0], spec.params[1], spec.params[2]);
    }
    if (f == "degree3_unique") {
        expect(0);
        return gen_degree3_unique();
    }
    if (f == "b36_extremal") {
        expect(3);
        return gen_b36_extremal(spec.params[0], spec.params[1], spec.params[2]);
    }
    fail(Errc::BadParams, "unknown family '" + f + "'");
}

namespace {

constexpr int kMaxCanonEdges = 9;

/// Sorted vertex signatures under one edge ordering; the canonical form is
/// the lexicographic minimum over all orderings. A vertex's signature records
/// which positions of the ordering contain it, so the sorted signature
/// multiset determines the hypergraph up to vertex relabeling.
std::vector<std::uint32_t> signature_vector(const std::vector<std::vector<int>>& edge_lists, int n,
                                            const std::vector<int>& perm,
                                            std::vector<std::uint32_t>& scratch) {
    std::fill(scratch.begin(), scratch.end(), 0u);
    for (std::size_t pos = 0; pos < perm.size(); ++pos)
        for (int v : edge_lists[perm[pos]]) scratch[v - 1] |= (1u << pos);
    std::vector<std::uint32_t> sorted(scratch.begin(), scratch.begin() + n);
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

void append_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>((v >> 24) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>(v & 0xff));
}

} // namespace

CanonicalForm canonical_form(const Hypergraph& g) {
    int t = g.edge_count();
    if (t > kMaxCanonEdges)
        fail(Errc::TooManyEdges, "canonical form supports at most " +
                                     std::to_string(kMaxCanonEdges) + " edges, got " +
                                     std::to_string(t));
    int n = g.vertex_count();
    std::vector<std::vector<int>> edge_lists;
    edge_lists.reserve(t);
    for (int i = 0; i < t; ++i) edge_lists.push_back(g.edge_vertices(i));

    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> scratch(static_cast<std::size_t>(std::max(n, 1)), 0u);
    std::vector<std::uint32_t> best;
    bool have = false;
    do {
        auto cur = signature_vector(edge_lists, n, perm, scratch);
        if (!have || cur < best) {
            best = std::move(cur);
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    CanonicalForm form;
    append_u32(form.bytes, static_cast<std::uint32_t>(n));
    append_u32(form.bytes, static_cast<std::uint32_t>(t));
    for (std::uint32_t s : best) append_u32(form.bytes, s);
    return form;
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

namespace {

/// Removes edge `index` and drops any vertices left uncovered, renumbering
/// the rest; used to identify the parent class of a candidate in the
/// augmentation search.
Hypergraph delete_edge_support(const Hypergraph& g, int index) {
    std::vector<VertexSet> kept;
    VertexSet support = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == index) continue;
        kept.push_back(g.edge(i));
        support |= g.edge(i);
    }
    std::vector<VertexSet> renumbered;
    renumbered.reserve(kept.size());
    for (VertexSet e : kept) {
        VertexSet out = 0;
        for (int v : set_to_vertices(e))
            out |= singleton(1 + popcount(support & (singleton(v) - 1)));
        renumbered.push_back(out);
    }
    return make_hypergraph(popcount(support), std::move(renumbered));
}

struct AugmentationSearch {
    int d = 2;
    int max_vertices = 0;
    std::function<bool(const std::vector<VertexSet>&, VertexSet)> admit;
    const SearchBudget* budget = nullptr;
    std::int64_t nodes = 0;
    std::int64_t classes_found = 0;

    void spend() {
        ++nodes;
        if (budget && nodes > budget->max_nodes)
            fail(Errc::BudgetExceeded, "search exceeded the node budget of " +
                                           std::to_string(budget->max_nodes));
        if (budget && budget->progress && nodes % 100000 == 0)
            *budget->progress << "search: " << classes_found << " classes, " << nodes
                              << " nodes\n";
    }

    /// Candidate edges extend the support only by a suffix of fresh labels,
    /// which is the unique representative of each extension up to relabeling
    /// the new vertices.
    std::vector<VertexSet> candidates(const Hypergraph& parent) const {
        int m = parent.vertex_count();
        std::vector<VertexSet> out;
        for (int fresh = 0; fresh <= d; ++fresh) {
            if (m + fresh > max_vertices) break;
            int old = d - fresh;
            if (old > m) continue;
            VertexSet suffix = 0;
            for (int j = 1; j <= fresh; ++j) suffix |= singleton(m + j);
            if (old == 0) {
                out.push_back(suffix);
                continue;
            }
            VertexSet sub = (VertexSet{1} << old) - 1;
            VertexSet limit = VertexSet{1} << m;
            while (sub < limit) {
                out.push_back(sub | suffix);
                sub = next_same_popcount(sub);
            }
        }
        return out;
    }

    std::vector<Hypergraph> level_up(const std::vector<Hypergraph>& reps) {
        std::vector<Hypergraph> next;
        std::set<std::string> seen;
        for (const Hypergraph& parent : reps) {
            CanonicalForm parent_form = canonical_form(parent);
            const std::vector<VertexSet>& parent_edges = parent.edges();
            for (VertexSet e : candidates(parent)) {
                spend();
                if (std::find(parent_edges.begin(), parent_edges.end(), e) != parent_edges.end())
                    continue;
                if (admit && !admit(parent_edges, e)) continue;
                std::vector<VertexSet> child_edges = parent_edges;
                child_edges.push_back(e);
                int child_n = std::max(parent.vertex_count(),
                                       e ? 64 - std::countl_zero(e) : 0);
                Hypergraph child = make_hypergraph(child_n, std::move(child_edges));
                CanonicalForm child_form = canonical_form(child);
                if (seen.count(child_form.bytes)) continue;
                if (!canonical_addition(child, parent_form)) continue;
                seen.insert(child_form.bytes);
                next.push_back(std::move(child));
                ++classes_found;
            }
        }
        return next;
    }

    /// Keep the child only when the parent it came from is a class whose
    /// canonical form is minimal among all single-edge deletions, so each
    /// isomorphism class is produced from exactly one parent class.
    bool canonical_addition(const Hypergraph& child, const CanonicalForm& parent_form) {
        CanonicalForm min_deletion;
        bool have = false;
        for (int i = 0; i < child.edge_count(); ++i) {
            CanonicalForm form = canonical_form(delete_edge_support(child, i));
            if (!have || form < min_deletion) {
                min_deletion = std::move(form);
                have = true;
            }
        }
        return have && min_deletion == parent_form;
    }

    std::vector<Hypergraph> run(int t) {
        std::vector<Hypergraph> reps{make_hypergraph(0, std::vector<VertexSet>{})};
        for (int level = 1; level <= t; ++level) {
            classes_found = 0;
            reps = level_up(reps);
            if (budget && budget->progress)
                *budget->progress << "search: level " << level << " has " << reps.size()
                                  << " classes (" << nodes << " nodes)\n";
        }
        return reps;
    }
};

} // namespace

std::vector<Hypergraph> enumerate_pure_hypergraphs(int d, int t, int max_vertices,
                                                   const SearchBudget& budget) {
    if (d < 1 || t < 0) fail(Errc::BadParams, "enumeration needs d >= 1 and t >= 0");
    if (t > kMaxCanonEdges)
        fail(Errc::TooManyEdges, "enumeration supports at most " +
                                     std::to_string(kMaxCanonEdges) + " edges");
    AugmentationSearch search;
    search.d = d;
    search.max_vertices = std::min(max_vertices, std::min(d * std::max(t, 1), kMaxVertices));
    search.budget = &budget;
    return search.run(t);
}

std::vector<Hypergraph> triple_union_survey(int t, const SearchBudget& budget) {
    if (t < 0) fail(Errc::BadParams, "survey needs t >= 0");
    if (t > kMaxCanonEdges)
        fail(Errc::TooManyEdges, "survey supports at most " + std::to_string(kMaxCanonEdges) +
                                     " edges");
    AugmentationSearch search;
    search.d = 3;
    search.max_vertices = std::min(3 * std::max(t, 1), kMaxVertices);
    search.budget = &budget;
    search.admit = [](const std::vector<VertexSet>& edges, VertexSet e) {
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                if (popcount(edges[i] | edges[j] | e) != 6) return false;
        return true;
    };
    return search.run(t);
}

Report reproduce_section4(const FieldSpec& field, const SearchBudget& budget,
                          const BettiOptions& opts) {
    Report report;
    report.id = "section4_survey";

    std::vector<Hypergraph> seven = triple_union_survey(7, budget);
    Comparison none;
    none.label = "classes with 7 edges";
    none.bound = 0;
    none.computed = static_cast<std::int64_t>(seven.size());
    none.verdict = seven.empty() ? Verdict::HoldsWithEquality : Verdict::Violated;
    report.comparisons.push_back(none);

    std::vector<Hypergraph> six = triple_union_survey(6, budget);
    report.details.push_back("6-edge survey classes: " + std::to_string(six.size()));

    std::vector<const Hypergraph*> survivors;
    for (const Hypergraph& g : six) {
        if (hochster_graded_betti(g, 2, 6, field, opts) == 20) survivors.push_back(&g);
    }
    Comparison unique;
    unique.label = "6-edge classes with beta_{2,6} = 20";
    unique.bound = 1;
    unique.computed = static_cast<std::int64_t>(survivors.size());
    unique.verdict =
        survivors.size() == 1 ? Verdict::HoldsWithEquality : Verdict::Violated;
    report.comparisons.push_back(unique);

    Comparison match;
    match.label = "survivor matches degree3_unique";
    match.bound = 1;
    match.computed = 0;
    if (survivors.size() == 1 && isomorphic(*survivors.front(), gen_degree3_unique()))
        match.computed = 1;
    match.verdict = match.computed == 1 ? Verdict::HoldsWithEquality : Verdict::Violated;
    report.comparisons.push_back(match);

    for (const Hypergraph* g : survivors)
        report.witnesses.push_back("survivor: " + edges_to_string(*g));
    return report;
}

Report conjecture_scan(int t_max, const FieldSpec& field, const SearchBudget& budget,
                       const BettiOptions& opts) {
    if (t_max < 1) fail(Errc::BadParams, "conjecture scan needs t_max >= 1");
    Report report;
    report.id = "b36_conjecture_scan";
    for (int t = 1; t <= t_max; ++t) {
        std::vector<Hypergraph> classes = enumerate_pure_hypergraphs(3, t, 3 * t, budget);
        std::int64_t bound = b36_value(t);
        std::int64_t violations = 0;
        std::int64_t at_equality = 0;
        bool extremal_found = false;
        NearlyEvenPartition parts = nearly_even_partition(t, 3);
        Hypergraph extremal = gen_b36_extremal(parts.parts[0], parts.parts[1], parts.parts[2]);
        Hypergraph extremal_support = induced(extremal, extremal.support()).graph;
        for (const Hypergraph& g : classes) {
            std::int64_t b = hochster_graded_betti(g, 2, 6, field, opts);
            if (b > bound) {
                ++violations;
                report.witnesses.push_back("violation at t=" + std::to_string(t) + ": " +
                                           edges_to_string(g));
            } else if (b == bound) {
                ++at_equality;
                if (isomorphic(g, extremal_support)) extremal_found = true;
            }
        }
        Comparison holds;
        holds.label = "violations at t=" + std::to_string(t);
        holds.bound = 0;
        holds.computed = violations;
        holds.verdict = violations == 0 ? Verdict::Holds : Verdict::Violated;
        report.comparisons.push_back(holds);

        Comparison attained;
        attained.label = "extremal family attains the bound at t=" + std::to_string(t);
        attained.bound = 1;
        attained.computed = extremal_found ? 1 : 0;
        attained.verdict = extremal_found ? Verdict::HoldsWithEquality : Verdict::Violated;
        report.comparisons.push_back(attained);

        report.details.push_back("t=" + std::to_string(t) + ": " +
                                 std::to_string(classes.size()) + " classes, " +
                                 std::to_string(at_equality) + " at the bound");
    }
    return report;
}

namespace {

Hypergraph shuffle_labels(std::mt19937_64& rng, int n, std::vector<VertexSet> edges) {
    std::vector<int> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 1);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<VertexSet> out;
    out.reserve(edges.size());
    for (VertexSet e : edges) {
        VertexSet m = 0;
        for (int v : set_to_vertices(e)) m |= singleton(relabel[v - 1]);
        out.push_back(m);
    }
    return make_hypergraph(n, std::move(out));
}

int pick(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(rng);
}

} // namespace

Hypergraph random_hypertree(std::mt19937_64& rng, int d, int n) {
    if (d < 1 || n < d) fail(Errc::BadParams, "random hypertree needs 1 <= d <= n");
    if (n > kMaxVertices) fail(Errc::TooManyVertices, "random hypertree needs n <= 64");
    std::vector<std::vector<int>> classes(d);
    VertexSet first = 0;
    for (int v = 1; v <= d; ++v) {
        classes[v - 1].push_back(v);
        first |= singleton(v);
    }
    std::vector<VertexSet> edges{first};
    int used = d;
    while (used < n) {
        int missing = pick(rng, 0, d - 1);
        VertexSet e = 0;
        for (int c = 0; c < d; ++c) {
            if (c == missing) continue;
            e |= singleton(classes[c][pick(rng, 0, static_cast<int>(classes[c].size()) - 1)]);
        }
        ++used;
        classes[missing].push_back(used);
        edges.push_back(e | singleton(used));
    }
    return shuffle_labels(rng, n, std::move(edges));
}

Hypergraph random_hyperforest(std::mt19937_64& rng, int d, int t) {
    if (d < 1 || t < 0) fail(Errc::BadParams, "random hyperforest needs d >= 1 and t >= 0");
    std::vector<VertexSet> edges;
    int used = 0;
    for (int k = 0; k < t; ++k) {
        int size = pick(rng, 1, d);
        if (used + size > kMaxVertices)
            fail(Errc::TooManyVertices, "random hyperforest ran out of vertex labels");
        VertexSet e = 0;
        bool ok = false;
        for (int attempt = 0; attempt < 20 && !ok; ++attempt) {
            int fresh = pick(rng, 1, size);
            fresh = std::max(fresh, size - used);
            e = 0;
            if (size > fresh) {
                std::vector<int> pool(used);
                std::iota(pool.begin(), pool.end(), 1);
                std::shuffle(pool.begin(), pool.end(), rng);
                for (int i = 0; i < size - fresh; ++i) e |= singleton(pool[i]);
            }
            for (int j = 1; j <= fresh; ++j) e |= singleton(used + j);
            ok = true;
            for (VertexSet old : edges)
                if ((old & e) == old) ok = false;
        }
        if (!ok) {
            e = 0;
            for (int j = 1; j <= size; ++j) e |= singleton(used + j);
        }
        int top = 64 - std::countl_zero(e);
        used = std::max(used, top);
        edges.push_back(e);
    }
    return shuffle_labels(rng, std::max(used, 0), std::move(edges));
}

Hypergraph random_pure_hypergraph(std::mt19937_64& rng, int d, int t, int n) {
    if (d < 1 || n < d || t < 0) fail(Errc::BadParams, "random hypergraph needs 1 <= d <= n, t >= 0");
    if (n > kMaxVertices) fail(Errc::TooManyVertices, "random hypergraph needs n <= 64");
    if (binomial(n, d) < t) fail(Errc::BadParams, "not enough distinct edges available");
    std::set<VertexSet> chosen;
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    while (static_cast<int>(chosen.size()) < t) {
        std::shuffle(pool.begin(), pool.end(), rng);
        VertexSet e = 0;
        for (int i = 0; i < d; ++i) e |= singleton(pool[i]);
        chosen.insert(e);
    }
    return make_hypergraph(n, std::vector<VertexSet>(chosen.begin(), chosen.end()));
}

Hypergraph random_antichain(std::mt19937_64& rng, int n, int max_edges) {
    if (n < 1 || max_edges < 0) fail(Errc::BadParams, "random antichain needs n >= 1");
    if (n > kMaxVertices) fail(Errc::TooManyVertices, "random antichain needs n <= 64");
    std::vector<VertexSet> edges;
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    int attempts = 8 * std::max(max_edges, 1);
    while (static_cast<int>(edges.size()) < max_edges && attempts-- > 0) {
        int size = std::min(n, 1 + std::min(pick(rng, 0, n - 1), pick(rng, 0, n - 1)));
        std::shuffle(pool.begin(), pool.end(), rng);
        VertexSet e = 0;
        for (int i = 0; i < size; ++i) e |= singleton(pool[i]);
        bool ok = true;
        for (VertexSet old : edges)
            if ((old & e) == old || (old & e) == e) ok = false;
        if (ok) edges.push_back(e);
    }
    return make_hypergraph(n, std::move(edges));
}

} // namespace bettilab
