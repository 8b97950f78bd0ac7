#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dfhad {

enum class ErrorCode {
    FactorOutOfRange,
    GroupMismatch,
    IdentityInStarComplement,
    CoefficientOverflow,
    NotPrime,
    DegreeTooLarge,
    BadDivisor,
    NotADifferenceFamily,
    WrongBlockCount,
    CoefficientOutOfRange,
    PreconditionFailed,
    NotPerfectSquareOrder,
    UnknownName,
    Z37ScanFailed,
    BoundTooLarge,
    BadParameter,
    PostVerifyFailed,
    ArrayRealizationFailed,
    OrderMismatch,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Library-wide exception. `detail` names the violated condition or the
/// offending value; `witness` carries an element index when one exists.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string detail, std::optional<std::size_t> witness = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }
    std::optional<std::size_t> witness() const noexcept { return witness_; }

private:
    ErrorCode code_;
    std::string detail_;
    std::optional<std::size_t> witness_;
};

}  // namespace dfhad
