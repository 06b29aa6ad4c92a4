#ifndef BETTILAB_ATLAS_HPP
#define BETTILAB_ATLAS_HPP

#include "bettilab/betti.hpp"
#include "bettilab/hypergraph.hpp"
#include "bettilab/report.hpp"

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

namespace bettilab {

/// Named example/extremal family plus its numeric parameters:
///   extremal_hypertree  d, n_1..n_d
///   path                n
///   beta35_extremal     t_1, t_2
///   taylor_equality     d, r, t
///   degree3_unique      (no parameters)
///   b36_extremal        t_1, t_2, t_3
struct FamilySpec {
    std::string family;
    std::vector<int> params;
};

Hypergraph generate(const FamilySpec& spec);

Hypergraph gen_extremal_hypertree(int d, const std::vector<int>& class_sizes);
Hypergraph gen_path(int n);
Hypergraph gen_beta35_extremal(int t1, int t2);
Hypergraph gen_taylor_equality(int d, int r, int t);
Hypergraph gen_degree3_unique();
Hypergraph gen_b36_extremal(int t1, int t2, int t3);

/// Canonical byte string of a hypergraph under vertex relabeling: minimum
/// over edge orderings of the sorted vertex-incidence signatures. Equal forms
/// iff isomorphic. Exact but factorial in the edge count; capped.
struct CanonicalForm {
    std::string bytes;
    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }
};

CanonicalForm canonical_form(const Hypergraph& g);
bool isomorphic(const Hypergraph& a, const Hypergraph& b);

struct SearchBudget {
    std::int64_t max_nodes = 20'000'000; // candidate extensions examined
    std::ostream* progress = nullptr;    // optional progress sink (error stream)
};

/// One representative per isomorphism class of pure degree-d hypergraphs with
/// exactly t edges and no isolated vertices, by canonical augmentation: a
/// child is kept only when the edge just added is a canonical deletion edge.
std::vector<Hypergraph> enumerate_pure_hypergraphs(int d, int t, int max_vertices,
                                                   const SearchBudget& budget = {});

/// Classes of t-edge degree-3 hypergraphs in which every 3 edges have a union
/// of exactly 6 vertices (so the Taylor count in degree (2,6) is C(t,3)).
std::vector<Hypergraph> triple_union_survey(int t, const SearchBudget& budget = {});

/// (a) the 7-edge survey is empty; (b) among the 6-edge survey classes,
/// exactly one has beta_{2,6} = C(6,3) = 20 and it matches degree3_unique.
Report reproduce_section4(const FieldSpec& field = FieldSpec::rationals(),
                          const SearchBudget& budget = {}, const BettiOptions& opts = {});

/// Checks beta_{2,6} <= C(t,3) - C(t1,3) - C(t2,3) - C(t3,3) on every
/// degree-3 class with at most t_max edges; reports violations (expected
/// none) and the equality classes.
Report conjecture_scan(int t_max, const FieldSpec& field = FieldSpec::rationals(),
                       const SearchBudget& budget = {}, const BettiOptions& opts = {});

/// Hypertree growth that stays d-colorable: each new edge takes one existing
/// vertex from all but one color class plus one fresh vertex in the missing
/// class. Labels are shuffled afterwards.
Hypergraph random_hypertree(std::mt19937_64& rng, int d, int n);

/// Hyperforest with t edges of sizes up to d, each contributing at least one
/// fresh vertex.
Hypergraph random_hyperforest(std::mt19937_64& rng, int d, int t);

/// t distinct d-subsets of [n], uniformly by rejection.
Hypergraph random_pure_hypergraph(std::mt19937_64& rng, int d, int t, int n);

/// Random antichain on [n] with at most max_edges edges of mixed sizes.
Hypergraph random_antichain(std::mt19937_64& rng, int n, int max_edges);

} // namespace bettilab

#endif
