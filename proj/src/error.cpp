#include "dfhad/error.hpp"

namespace dfhad {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::FactorOutOfRange: return "FactorOutOfRange";
        case ErrorCode::GroupMismatch: return "GroupMismatch";
        case ErrorCode::IdentityInStarComplement: return "IdentityInStarComplement";
        case ErrorCode::CoefficientOverflow: return "CoefficientOverflow";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorCode::BadDivisor: return "BadDivisor";
        case ErrorCode::NotADifferenceFamily: return "NotADifferenceFamily";
        case ErrorCode::WrongBlockCount: return "WrongBlockCount";
        case ErrorCode::CoefficientOutOfRange: return "CoefficientOutOfRange";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::NotPerfectSquareOrder: return "NotPerfectSquareOrder";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::Z37ScanFailed: return "Z37ScanFailed";
        case ErrorCode::BoundTooLarge: return "BoundTooLarge";
        case ErrorCode::BadParameter: return "BadParameter";
        case ErrorCode::PostVerifyFailed: return "PostVerifyFailed";
        case ErrorCode::ArrayRealizationFailed: return "ArrayRealizationFailed";
        case ErrorCode::OrderMismatch: return "OrderMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& detail,
                           std::optional<std::size_t> witness) {
    std::string msg(to_string(code));
    if (!detail.empty()) msg += ": " + detail;
    if (witness) msg += " (witness element " + std::to_string(*witness) + ")";
    return msg;
}

}  // namespace

Error::Error(ErrorCode code, std::string detail, std::optional<std::size_t> witness)
    : std::runtime_error(format_message(code, detail, witness)),
      code_(code),
      detail_(std::move(detail)),
      witness_(witness) {}

}  // namespace dfhad
