#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hvcert {

enum class ErrorCode {
  invalid_factorization,
  negative_radicand,
  out_of_range,
  hypothesis_violated,
  internal_consistency,
  divergent_integral,
  degenerate_parameters,
  quadrature_not_converged,
  excluded_eigenvalue,
  nonzero_mean,
  accuracy_failure,
  invalid_config,
  io_failure,
};

std::string_view to_string(ErrorCode code);

/// Structured failure carried by every module. `code()` is stable and is what
/// callers and the CLI branch on; `what()` is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hvcert
