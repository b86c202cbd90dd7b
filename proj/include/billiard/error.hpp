#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace billiard {

enum class ErrorKind {
  Parse,
  InvalidField,
  FieldMismatch,
  DivisionByZero,
  DimensionMismatch,
  RepeatedEigenvalue,
  NotMultiplicityFree,
  SeedNotGeneric,
  NotLeonardSystem,
  InvalidParameters,
  ZeroDenominator,
  InconsistentLabels,
  Schema,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to a diagnostic without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace billiard
