#include "taulike/error.hpp"

namespace taulike {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CycleError: return "CycleError";
    case ErrorCode::UnknownIdError: return "UnknownIdError";
    case ErrorCode::DuplicateIdError: return "DuplicateIdError";
    case ErrorCode::MissingPartError: return "MissingPartError";
    case ErrorCode::FiniteDomainEnd: return "FiniteDomainEnd";
    case ErrorCode::OracleMissing: return "OracleMissing";
    case ErrorCode::ClassifierInconsistent: return "ClassifierInconsistent";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::NotAnExtension: return "NotAnExtension";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::HorizonTooSmall: return "HorizonTooSmall";
    case ErrorCode::PrefixTooShort: return "PrefixTooShort";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace taulike
