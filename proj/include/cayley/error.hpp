#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cay {

enum class ErrorKind {
  ZeroInversion,
  NoRoot,
  SearchExhausted,
  FieldMismatch,
  ZeroDenominator,
  PoleAtPoint,
  CharacteristicTooSmall,
  DegreeZero,
  ExpressionTooLarge,
  NotDivisible,
  CapExceeded,
  BadParameter,
  RankMismatch,
  DegenerateSpec,
  Unstable,
  BadRoot,
  NotOnHypersurface,
  HyperplaneCase,
  BadCharacteristic,
  EliminationMismatch,
  SingularDenominator,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cay
