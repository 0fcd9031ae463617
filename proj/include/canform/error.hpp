#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace canform {

// Every failure raised by the library carries one of these kinds. The CLI
// prints the kind's name, so names are part of the external surface.
enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    InvalidField,
    DimensionMismatch,
    SingularMatrix,
    EmptyInput,
    NotMonic,
    DegreeZero,
    NonSquare,
    ChainViolation,
    InvalidPartition,
    DegreeMismatch,
    TraceNonzero,
    NotInY,
    NotInQ,
    RootsMissingInField,
    EigenvaluesMissingInField,
    DegenerateDiagonal,
    NotInW,
    DegenerateComposite,
    BasisFailure,
    ParseError,
    UsageError,
};

std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

  private:
    ErrorKind kind_;
};

} // namespace canform
