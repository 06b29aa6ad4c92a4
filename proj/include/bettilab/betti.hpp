#ifndef BETTILAB_BETTI_HPP
#define BETTILAB_BETTI_HPP

#include "bettilab/homology.hpp"
#include "bettilab/hypergraph.hpp"
#include "bettilab/report.hpp"

#include <map>
#include <optional>
#include <utility>

namespace bettilab {

/// Graded Betti numbers of a squarefree monomial ideal, minimal (Hochster) or
/// Taylor (subset counts). Only nonzero entries are stored.
struct BettiTable {
    enum class Kind { Minimal, Taylor };

    std::map<std::pair<int, int>, std::int64_t> entries; // (i, a) -> count
    Kind kind = Kind::Minimal;
    std::optional<FieldSpec> field; // Minimal only

    std::int64_t at(int i, int a) const {
        auto it = entries.find({i, a});
        return it == entries.end() ? 0 : it->second;
    }

    int max_index() const {
        int m = -1;
        for (const auto& [ia, v] : entries) m = std::max(m, ia.first);
        return m;
    }
};

struct BettiOptions {
    int max_vertices = 22;  // betti_table cap
    int max_edges = 25;     // Taylor full-table cap
    bool cone_pruning = true;
    HomologyOptions homology;
};

/// Hochster's formula: sum over |W| = a of the reduced Betti number of
/// Gamma(G)[W] in homological degree |W|-i-2. Out-of-range (i, a) give 0.
std::int64_t hochster_graded_betti(const Hypergraph& g, int i, int a,
                                   const FieldSpec& field = FieldSpec::rationals(),
                                   const BettiOptions& opts = {});

/// Full minimal table over all 2^n subsets; cone subsets are skipped when
/// pruning is on. Deterministic at any thread count.
BettiTable betti_table(const Hypergraph& g, const FieldSpec& field = FieldSpec::rationals(),
                       const BettiOptions& opts = {});

/// beta_i = sum over a of entries[(i, a)], returned as a dense sequence.
std::vector<std::int64_t> total_betti(const BettiTable& table);

/// Taylor count: number of (i+1)-subsets of the generators whose union has
/// cardinality j (the lcm degree, squarefree case).
std::int64_t taylor_graded_betti(const Hypergraph& g, int i, int j, const BettiOptions& opts = {});

BettiTable taylor_table(const Hypergraph& g, const BettiOptions& opts = {});

/// Half the number of ordered generator triples (F_i, F_j, F_k) with
/// F_i disjoint from both and |F_j ∩ F_k| = 1; equals the Taylor count in
/// degree (2, 3d-1) for pure G of degree d.
std::int64_t taylor_beta2_3dm1(const Hypergraph& g);

/// Both resolutions resolve the ideal, so for every degree a the alternating
/// sums of minimal and Taylor entries agree; the Report lists each degree.
Report euler_consistency(const Hypergraph& g, const FieldSpec& field = FieldSpec::rationals(),
                         const BettiOptions& opts = {});

} // namespace bettilab

#endif
