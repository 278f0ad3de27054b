#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace featscale {

enum class ErrorCode {
  invalid_argument,
  shape_mismatch,
  degenerate_degree,
  insufficient_spectrum,
  no_eigenpair,
  degenerate_pencil,
  insufficient_samples,
  isolated_sample,
  non_finite,
  degenerate_vector,
  degenerate_supervision,
  internal_consistency,
  no_scaling,
  non_normalizable,
  non_binary_labels,
  zero_variance,
  parse_error,
  empty_training,
  split_failed,
};

std::string_view to_string(ErrorCode code);

/// All library failures are reported as this exception; `code()` is stable
/// and is what the CLI prints in its structured error line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace featscale
