#ifndef BETTILAB_BOUNDS_HPP
#define BETTILAB_BOUNDS_HPP

#include "bettilab/betti.hpp"
#include "bettilab/homology.hpp"
#include "bettilab/hypergraph.hpp"
#include "bettilab/report.hpp"

#include <string>
#include <vector>

namespace bettilab {

/// Weakly decreasing parts, pairwise differing by at most 1. Parts of size
/// zero only appear when the total is smaller than the part count; the flag
/// records that the strict definition was relaxed.
struct NearlyEvenPartition {
    std::vector<int> parts;
    bool has_zero_parts = false;

    int total() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
};

NearlyEvenPartition nearly_even_partition(int r, int d);

// Closed-form bound values.
std::int64_t tree_lb_value(const std::vector<int>& class_sizes, int j);
std::int64_t forest_lb_value(int t, int d, int j);
std::int64_t beta35_value(int t);
std::int64_t b36_value(int t);

/// Dispatcher over the theorem ids used by the CLI: tree_lb takes the class
/// sizes followed by j, forest_lb takes (t, d, j), beta35 and b36 take (t).
std::int64_t bound_value(const std::string& theorem, const std::vector<std::int64_t>& params);

/// Verifies one named bound on a concrete hypergraph:
///   tree_lb      beta_{j-1} >= sum C(n_i, j) for every j >= 2 (hypertree);
///   forest_lb    same with the nearly even d-partition of t+d-1 (hyperforest);
///   diameter_eq  equality at every j >= 2 iff diameter <= 4 (degree-2 tree);
///   beta35       beta_{2,3d-1} <= C(t,3)-C(t_1,3)-C(t_2,3) plus the proof's
///                chain taylor <= P(G') <= t*avg*(t-1-avg)/2, links compared
///                exactly after clearing denominators (pure G);
///   b36          beta_{2,6} <= C(t,3)-sum C(t_i,3), evidence only (degree 3).
Report verify_bound(const std::string& theorem, const Hypergraph& g,
                    const FieldSpec& field = FieldSpec::rationals(),
                    const BettiOptions& opts = {});

/// Witness produced by the deletion algorithm behind the hypertree lower
/// bound. Vertices carry the labels of the input hypergraph.
struct WitnessSubset {
    VertexSet u_prime = 0;
    VertexSet b_prime = 0;
    std::vector<int> deleted; // w_1..w_r in deletion order
    int homology_degree = 0;  // |U'| - |B'| - 1
};

/// Runs the witness construction: start from U = V - (B - B'), alternate
/// Step 1 (delete a non-blue u kept out of some edge of every blue vertex,
/// via antistar, repeated to exhaustion) and Step 2 (delete a non-blue u that
/// every edge of some blue vertex passes through, via link, recording u),
/// finish with U' = W ∪ B', and check that the reduced homology of the
/// complex induced on U' in degree |U'|-|B'|-1 is nonzero over the field.
/// Candidates are always taken in increasing vertex order.
WitnessSubset witness_subset(const Hypergraph& g, const Coloring& kappa, int blue,
                             VertexSet b_prime,
                             const FieldSpec& field = FieldSpec::rationals());

/// Number of 3-subsets of G''s vertices inducing exactly one edge.
std::int64_t p_count(const IntersectionGraph& gprime);

/// Minimum size of a family of l-subsets of [n] meeting every k-subset, by
/// iterative-deepening branch and bound on the first uncovered k-subset.
int turan_number(int n, int k, int l);

} // namespace bettilab

#endif
