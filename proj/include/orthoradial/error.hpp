#pragma once

#include <stdexcept>
#include <string>

namespace orthoradial {

// Every failure the library reports deliberately (as opposed to programming
// errors, which assert) carries one of these codes so callers and tests can
// dispatch without parsing messages.
enum class ErrorCode {
    // plane graph construction
    NonPlanarRotation,
    DegreeExceeded,
    BadReferenceDart,
    Disconnected,
    // subpaths and cycles
    AmbiguousEndpoint,
    NotOnContainer,
    NotACycle,
    NotSimple,
    NotIncident,
    NotAPath,
    NotClosed,
    // representation / validity
    PreconditionsUnchecked,
    CycleLimitExceeded,
    NoCommonCentralFaceVertex,
    // rectangulation
    NotACandidate,
    PortOccupied,
    InternalInvariantBroken,
    // metrics
    NotRectangular,
    InconsistentClosure,
    NotValid,
    // io
    SyntaxError,
    SemanticError,
    // oracle
    BoundExceeded,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition)
        fail(code, message);
}

} // namespace orthoradial
