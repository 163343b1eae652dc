#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qhopf {

enum class ErrorCode {
    DivisionByZero,
    ConductorMismatch,
    SingularMatrix,
    UnsupportedSize,
    UnsupportedShape,
    TruncationTooLarge,
    DegreeExceedsTruncation,
    DegenerateDenominator,
    NoHaarState,
    InvalidParameter,
    ParseError,
    UnreadableFile,
    MalformedJson,
};

/// Stable machine-readable name, used in CLI error reports.
constexpr std::string_view error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::ConductorMismatch: return "conductor_mismatch";
    case ErrorCode::SingularMatrix: return "singular_matrix";
    case ErrorCode::UnsupportedSize: return "unsupported_size";
    case ErrorCode::UnsupportedShape: return "unsupported_shape";
    case ErrorCode::TruncationTooLarge: return "truncation_too_large";
    case ErrorCode::DegreeExceedsTruncation: return "degree_exceeds_truncation";
    case ErrorCode::DegenerateDenominator: return "degenerate_denominator";
    case ErrorCode::NoHaarState: return "no_haar_state";
    case ErrorCode::InvalidParameter: return "invalid_parameter";
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::UnreadableFile: return "unreadable_file";
    case ErrorCode::MalformedJson: return "malformed_json";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace qhopf
