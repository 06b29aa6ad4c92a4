#ifndef BETTILAB_ERRORS_HPP
#define BETTILAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bettilab {

enum class Errc {
    EmptyEdge,
    VertexOutOfRange,
    NotAntichain,
    DegenerateLink,
    TooManyEdges,
    TooManyVertices,
    TooManyFaces,
    ColorCountTooSmall,
    NotAGraph,
    Disconnected,
    NotPure,
    ZeroParts,
    BadParams,
    NotAHypertree,
    NotAHyperforest,
    NotColorable,
    ImproperColoring,
    WitnessCheckFailed,
    NotApplicable,
    TooLarge,
    BudgetExceeded,
    ParseError,
    NotSquarefree,
    InvalidField,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace bettilab

#endif
