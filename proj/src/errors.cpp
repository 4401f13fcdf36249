#include "dpr/errors.hpp"

namespace dpr {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::AsymmetricRotation: return "AsymmetricRotation";
    case ErrorCode::NotPlanarEmbedding: return "NotPlanarEmbedding";
    case ErrorCode::MultiEdgeOrLoop: return "MultiEdgeOrLoop";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::TerminalNotInGraph: return "TerminalNotInGraph";
    case ErrorCode::SharedVertex: return "SharedVertex";
    case ErrorCode::WrongEndpoints: return "WrongEndpoints";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::InvalidLinkage: return "InvalidLinkage";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::DegenerateAtTerminal: return "DegenerateAtTerminal";
    case ErrorCode::SharedEndpoint: return "SharedEndpoint";
    case ErrorCode::InconsistentMu: return "InconsistentMu";
    case ErrorCode::NoDualPath: return "NoDualPath";
    case ErrorCode::NoLinkagePossible: return "NoLinkagePossible";
    case ErrorCode::AdjacentTerminals: return "AdjacentTerminals";
    case ErrorCode::CutNotK: return "CutNotK";
    case ErrorCode::MuNonzero: return "MuNonzero";
    case ErrorCode::NoImprovingStep: return "NoImprovingStep";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::AdjacentST: return "AdjacentST";
    case ErrorCode::TooMany: return "TooMany";
    case ErrorCode::InvalidNcl: return "InvalidNcl";
    case ErrorCode::NotPlanarH: return "NotPlanarH";
    case ErrorCode::MalformedLinkage: return "MalformedLinkage";
    case ErrorCode::TooFewColumns: return "TooFewColumns";
    case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::vector<long long> info)
    : std::runtime_error(std::string(to_string(code)) + ": " + message)
    , code_(code)
    , info_(std::move(info))
{
}

} // namespace dpr
