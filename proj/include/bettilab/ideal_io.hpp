#ifndef BETTILAB_IDEAL_IO_HPP
#define BETTILAB_IDEAL_IO_HPP

#include "bettilab/betti.hpp"
#include "bettilab/hypergraph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bettilab {

/// A squarefree monomial ideal as written in a file: generator supports, the
/// variable names used (empty means the default x1..xn), where it came from,
/// and which of the three text formats it was read in.
struct IdealDocument {
    int n = 0;
    std::vector<VertexSet> generators;
    std::vector<std::string> variable_names; // size n when non-default
    std::string provenance;
    std::string format = "monomials"; // monomials | indices | json

    std::string variable(int v) const;
    Hypergraph hypergraph() const;
    bool operator==(const IdealDocument& o) const {
        return n == o.n && generators == o.generators && variable_names == o.variable_names &&
               format == o.format;
    }
};

/// Formats: monomials (`x1*x2*x4` per line, juxtaposed `x1x2x4` accepted,
/// arbitrary identifiers allowed and numbered by first appearance), indices
/// (whitespace-separated vertex numbers per line), json ({"n": int,
/// "edges": [[int]]}). Blank lines and `#` comments are ignored everywhere;
/// "auto" detects from the first meaningful character.
IdealDocument parse_ideal(std::string_view text, const std::string& format = "auto",
                          const std::string& provenance = "");

IdealDocument document_from(const Hypergraph& g, const std::string& provenance = "");

/// Writes the document back in its own format; parsing the result
/// reproduces the document exactly.
std::string format_ideal(const IdealDocument& doc);

/// diagram: grid with one row per strand a-i and one column per homological
/// index i, entries right-aligned, zeros as ".". json: {"schema", "kind",
/// "field", "entries": [{"i", "a", "value"}]} sorted by (i, a).
std::string format_betti_table(const BettiTable& table, const std::string& style);

constexpr const char* kTableSchemaVersion = "bettilab-table-1";

} // namespace bettilab

#endif
