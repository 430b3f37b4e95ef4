#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sl2wb {

enum class ErrorKind {
  Parse,
  CapExceeded,
  NotAUnit,
  DeterminantNotOne,
  WholeIdeal,
  NotInLevelIdeal,
  NotNormal,
  NotARadix,
  LevelZero,
  ManyUnitsFailed,
  WrongRing,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` lets callers (the CLI in
/// particular) map failures to exit codes and structured refusals.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace sl2wb
