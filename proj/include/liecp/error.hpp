#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liecp {

enum class ErrorKind {
  ParseError,
  DimensionMismatch,
  IndexOutOfRange,
  DuplicateLabel,
  DuplicatePair,
  InvalidPair,
  JacobiViolation,
  NotAnIdeal,
  NotASubalgebra,
  NotARepresentation,
  NotADerivation,
  NotCentral,
  ZeroVector,
  NotCommutative,
  NotAssociative,
  NotLeftSymmetric,
  NoUnit,
  NotCommutativeIdeal,
  NotCodimOne,
  WrongCodimension,
  ChainGap,
  AmbientMismatch,
  InconsistentConditions,
  SamplingExhausted,
  PreconditionViolated,
  InvalidPolicy,
  InvalidComposition,
  UnsupportedType,
  UnknownEntry,
  MissingParameter,
  NotExact,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code logic) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace liecp
