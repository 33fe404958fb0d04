#pragma once

#include <stdexcept>
#include <string>

namespace heatfix {

enum class ErrorKind {
  Io,
  NotPng,
  BadImage,
  Parse,
  Order,
  GridFormat,
  InvalidWindow,
  WindowTooLarge,
  InvalidArgument,
  DimensionMismatch,
  ZeroMass,
  ZeroVariance,
};

/// Exception carrying a machine-readable kind. Parse and order errors also
/// carry the 1-based line number they refer to (0 when not applicable).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t line = 0)
      : std::runtime_error(message), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
};

// Process exit codes used by the command line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitParameter = 3;
inline constexpr int kExitDimension = 4;
inline constexpr int kExitDegenerate = 5;

int exit_code_for(ErrorKind kind) noexcept;

}  // namespace heatfix
