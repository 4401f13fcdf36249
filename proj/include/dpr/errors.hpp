#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dpr {

enum class ErrorCode {
    AsymmetricRotation,
    NotPlanarEmbedding,
    MultiEdgeOrLoop,
    UnknownVertex,
    TerminalNotInGraph,
    SharedVertex,
    WrongEndpoints,
    NotAPath,
    InvalidLinkage,
    NotAdjacent,
    DegenerateAtTerminal,
    SharedEndpoint,
    InconsistentMu,
    NoDualPath,
    NoLinkagePossible,
    AdjacentTerminals,
    CutNotK,
    MuNonzero,
    NoImprovingStep,
    WindowTooSmall,
    DegreeTooSmall,
    AdjacentST,
    TooMany,
    InvalidNcl,
    NotPlanarH,
    MalformedLinkage,
    TooFewColumns,
    InvalidInput,
};

/// Stable name of an error code, used in JSON output.
const char* to_string(ErrorCode code);

/// Library exception. @p info carries the integer payload of the error
/// (a vertex id, a path index, a sequence index, ...).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::vector<long long> info = {});

    ErrorCode code() const noexcept { return code_; }
    const std::vector<long long>& info() const noexcept { return info_; }

private:
    ErrorCode code_;
    std::vector<long long> info_;
};

/// Result of a validating operation: ok, or an error code with payload.
struct Status {
    bool ok = true;
    ErrorCode code = ErrorCode::InvalidInput;
    std::vector<long long> info;
    std::string message;

    static Status success() { return {}; }
    static Status failure(ErrorCode c, std::string msg, std::vector<long long> info = {})
    {
        Status s;
        s.ok = false;
        s.code = c;
        s.info = std::move(info);
        s.message = std::move(msg);
        return s;
    }
    explicit operator bool() const noexcept { return ok; }
};

} // namespace dpr
