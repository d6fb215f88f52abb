#pragma once

#include <stdexcept>
#include <string>

namespace hbic {

// Every failure surfaced by the library carries one of these kinds so that
// callers (and the CLI exit-code mapping) can react without string matching.
enum class ErrorKind {
    MissingValue,
    SchemaMismatch,
    TypeViolation,
    ParseError,
    InvalidBins,
    OutOfRange,
    EmptyBicluster,
    EmptySeed,
    NoColumnLeft,
    EmptyCandidateSet,
    EmptySolution,
    InfeasiblePlacement,
    InvalidArgument,
    Internal,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::MissingValue: return "MissingValue";
        case ErrorKind::SchemaMismatch: return "SchemaMismatch";
        case ErrorKind::TypeViolation: return "TypeViolation";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidBins: return "InvalidBins";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::EmptyBicluster: return "EmptyBicluster";
        case ErrorKind::EmptySeed: return "EmptySeed";
        case ErrorKind::NoColumnLeft: return "NoColumnLeft";
        case ErrorKind::EmptyCandidateSet: return "EmptyCandidateSet";
        case ErrorKind::EmptySolution: return "EmptySolution";
        case ErrorKind::InfeasiblePlacement: return "InfeasiblePlacement";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    // True for failures caused by user input (bad files, bad flags) as
    // opposed to broken internal invariants.
    bool is_input_error() const noexcept { return kind_ != ErrorKind::Internal; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace hbic
