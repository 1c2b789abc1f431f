// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symtrace {

enum class ErrorKind {
  MixedField,
  DivisionByZero,
  DimensionMismatch,
  CharacteristicTooSmall,
  FunctionalVanishes,
  SingularMatrix,
  OracleTooLarge,
  UnknownLabel,
  OutOfValidatedRange,
  Parse,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so that the C API and
/// the command line can map it onto a status code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace symtrace
