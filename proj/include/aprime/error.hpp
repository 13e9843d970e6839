#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aprime {

enum class ErrorCode {
    BadTableShape,
    NotAbelianGroup,
    NotAssociative,
    NotDistributive,
    OrderTooLarge,
    RingMismatch,
    KindMismatch,
    ImproperIdeal,
    ZeroIdeal,
    NoIdentity,
    NotClosed,
    NotTwoSided,
    NotAnIdeal,
    UnknownName,
    NotAdditive,
    NotMultiplicative,
    NotSurjective,
    UnknownTheoremId,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code and a
/// message that includes the offending witness where one exists.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace aprime
