#include "liecp/error.hpp"

namespace liecp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::DuplicatePair: return "DuplicatePair";
    case ErrorKind::InvalidPair: return "InvalidPair";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::NotARepresentation: return "NotARepresentation";
    case ErrorKind::NotADerivation: return "NotADerivation";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotLeftSymmetric: return "NotLeftSymmetric";
    case ErrorKind::NoUnit: return "NoUnit";
    case ErrorKind::NotCommutativeIdeal: return "NotCommutativeIdeal";
    case ErrorKind::NotCodimOne: return "NotCodimOne";
    case ErrorKind::WrongCodimension: return "WrongCodimension";
    case ErrorKind::ChainGap: return "ChainGap";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::InconsistentConditions: return "InconsistentConditions";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InvalidPolicy: return "InvalidPolicy";
    case ErrorKind::InvalidComposition: return "InvalidComposition";
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::MissingParameter: return "MissingParameter";
    case ErrorKind::NotExact: return "NotExact";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace liecp
