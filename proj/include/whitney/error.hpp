#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace whitney {

enum class ErrorCode {
    // complex construction
    RepeatedVertexInFace,
    LoopEdge,
    UnknownVertex,
    FaceTooShort,
    DuplicateVertex,
    IsolatedVertex,
    // graph algorithms
    DisconnectedInput,
    // rotation systems
    ReversalViolation,
    MissingFace,
    ForeignFace,
    MissingEdge,
    UnknownEdge,
    NotWhitney,
    TooLarge,
    // fattening
    NotSimplicial,
    NotLocally2Connected,
    NonPlanarRotation,
    PlanarityPostconditionFailed,
    // file formats
    SyntaxError,
    SchemaError,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::RepeatedVertexInFace: return "RepeatedVertexInFace";
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::FaceTooShort: return "FaceTooShort";
        case ErrorCode::DuplicateVertex: return "DuplicateVertex";
        case ErrorCode::IsolatedVertex: return "IsolatedVertex";
        case ErrorCode::DisconnectedInput: return "DisconnectedInput";
        case ErrorCode::ReversalViolation: return "ReversalViolation";
        case ErrorCode::MissingFace: return "MissingFace";
        case ErrorCode::ForeignFace: return "ForeignFace";
        case ErrorCode::MissingEdge: return "MissingEdge";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::NotWhitney: return "NotWhitney";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotSimplicial: return "NotSimplicial";
        case ErrorCode::NotLocally2Connected: return "NotLocally2Connected";
        case ErrorCode::NonPlanarRotation: return "NonPlanarRotation";
        case ErrorCode::PlanarityPostconditionFailed: return "PlanarityPostconditionFailed";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace whitney
