#ifndef BETTILAB_REPORT_HPP
#define BETTILAB_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bettilab {

enum class Verdict { Holds, HoldsWithEquality, Violated };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::HoldsWithEquality: return "holds-with-equality";
        case Verdict::Violated: return "violated";
    }
    return "?";
}

/// One tested comparison: a bound against a computed value.
struct Comparison {
    std::string label;
    std::int64_t bound = 0;
    std::int64_t computed = 0;
    Verdict verdict = Verdict::Holds;
};

/// Structured outcome of a theorem/bound verification. Verdicts are derived
/// purely from the stored values.
struct Report {
    std::string id;
    std::vector<Comparison> comparisons;
    std::vector<std::string> details;
    std::vector<std::string> witnesses;

    bool passed() const {
        for (const auto& c : comparisons)
            if (c.verdict == Verdict::Violated) return false;
        return true;
    }

    bool all_equalities() const {
        for (const auto& c : comparisons)
            if (c.verdict != Verdict::HoldsWithEquality) return false;
        return true;
    }
};

/// Verdict for a lower bound `computed >= bound`.
inline Verdict lower_bound_verdict(std::int64_t bound, std::int64_t computed) {
    if (computed < bound) return Verdict::Violated;
    return computed == bound ? Verdict::HoldsWithEquality : Verdict::Holds;
}

/// Verdict for an upper bound `computed <= bound`.
inline Verdict upper_bound_verdict(std::int64_t bound, std::int64_t computed) {
    if (computed > bound) return Verdict::Violated;
    return computed == bound ? Verdict::HoldsWithEquality : Verdict::Holds;
}

} // namespace bettilab

#endif
