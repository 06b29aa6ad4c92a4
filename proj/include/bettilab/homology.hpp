#ifndef BETTILAB_HOMOLOGY_HPP
#define BETTILAB_HOMOLOGY_HPP

#include "bettilab/hypergraph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace bettilab {

/// Coefficient field: the rationals (characteristic 0) or GF(p).
struct FieldSpec {
    long long characteristic = 0;

    static FieldSpec rationals() { return FieldSpec{}; }
    /// InvalidField unless p is a prime below 2^31.
    static FieldSpec gf(long long p);

    bool is_rational() const { return characteristic == 0; }
    bool operator==(const FieldSpec&) const = default;
};

/// "q" or "gf:P".
std::string field_name(const FieldSpec& field);
FieldSpec parse_field(const std::string& text);

/// dims[p] = dim of p-th reduced homology; absent entries are zero.
using HomologyProfile = std::map<int, std::int64_t>;

struct HomologyOptions {
    std::size_t max_faces = std::size_t(1) << 22;
    bool collapse = true; // elementary-collapse preprocessing (homotopy safe)
};

/// All reduced Betti numbers of K over the field. Faces are enumerated from
/// the minimal nonfaces; boundary ranks over the rationals use fraction-free
/// elimination on int64 with escalation to arbitrary precision on overflow,
/// over GF(p) modular elimination.
HomologyProfile reduced_betti_all(const SimplicialComplexView& k,
                                  const FieldSpec& field = FieldSpec::rationals(),
                                  const HomologyOptions& opts = {});

/// Single reduced Betti number; enumerates faces of cardinality <= p+2 only.
std::int64_t reduced_betti(const SimplicialComplexView& k, int p,
                           const FieldSpec& field = FieldSpec::rationals(),
                           const HomologyOptions& opts = {});

/// An apex vertex contained in no minimal nonface of K, if any. A cone is
/// contractible, so every reduced Betti number vanishes.
std::optional<int> is_cone(const SimplicialComplexView& k);

/// Reduced Euler characteristic: sum over faces F (empty set included) of
/// (-1)^(|F|-1). Equals the alternating sum of the reduced Betti numbers.
std::int64_t reduced_euler(const SimplicialComplexView& k, const HomologyOptions& opts = {});

} // namespace bettilab

#endif
