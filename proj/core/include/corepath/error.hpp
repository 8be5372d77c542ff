#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace corepath {

/// Error codes for every refusal the library can issue.  Each code names the
/// violated precondition; the CLI maps any of them to its input-error exit.
enum class Errc {
    InvalidCharacter,
    NotFreeMotzkin,
    NotMotzkinPrefix,
    NotMotzkinPath,
    NoSpecialStep,
    LineNotTouched,
    NotCornerless,
    NotCornerlessFree,
    NotCornerlessPrefix,
    NotSymmetricPath,
    LengthParityMismatch,
    WrongFlatCount,
    MalformedPartition,
    NotDecreasing,
    NotOddDistinct,
    OutOfDiagram,
    OutOfRange,
    NotTCore,
    NotSelfConjugate,
    NotSelfConjugateTCore,
    MalformedAbacus,
    MalformedDoubledAbacus,
    MalformedSequence,
    SumMismatch,
    CapExceeded,
    InternalInconsistency,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what_arg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what_arg), code_(code) {}

    Error(Errc code, const std::string& what_arg, std::size_t position)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what_arg +
                             " (position " + std::to_string(position) + ")"),
          code_(code), position_(position) {}

    Errc code() const noexcept { return code_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

  private:
    Errc code_;
    std::optional<std::size_t> position_;
};

} // namespace corepath
