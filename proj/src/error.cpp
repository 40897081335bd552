#include "hvcert/error.hpp"

namespace hvcert {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_factorization: return "invalid factorization";
    case ErrorCode::negative_radicand: return "negative radicand";
    case ErrorCode::out_of_range: return "out of range";
    case ErrorCode::hypothesis_violated: return "hypothesis violated";
    case ErrorCode::internal_consistency: return "internal consistency";
    case ErrorCode::divergent_integral: return "divergent integral";
    case ErrorCode::degenerate_parameters: return "degenerate parameters";
    case ErrorCode::quadrature_not_converged: return "quadrature not converged";
    case ErrorCode::excluded_eigenvalue: return "excluded eigenvalue";
    case ErrorCode::nonzero_mean: return "nonzero mean";
    case ErrorCode::accuracy_failure: return "accuracy failure";
    case ErrorCode::invalid_config: return "invalid config";
    case ErrorCode::io_failure: return "io failure";
  }
  return "unknown";
}

}  // namespace hvcert
