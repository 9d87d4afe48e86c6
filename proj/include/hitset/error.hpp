#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace hitset {

enum class ErrorCode {
  NotSeparable,
  DuplicateX,
  DegenerateDisk,
  Infeasible,
  Infeasible1D,
  PrereqViolated,
  RadiusMismatch,
  EmptyPointSet,
  TooLarge,
  GenerationFailure,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

/// Single exception type for the library. `index()` carries the offending
/// item when there is one: a 0-based disk or point index, or a 1-based line
/// number for ParseError.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), code_(code), index_(index) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace hitset
