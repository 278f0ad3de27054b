#include "featscale/error.hpp"

namespace featscale {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::shape_mismatch: return "shape_mismatch";
    case ErrorCode::degenerate_degree: return "degenerate_degree";
    case ErrorCode::insufficient_spectrum: return "insufficient_spectrum";
    case ErrorCode::no_eigenpair: return "no_eigenpair";
    case ErrorCode::degenerate_pencil: return "degenerate_pencil";
    case ErrorCode::insufficient_samples: return "insufficient_samples";
    case ErrorCode::isolated_sample: return "isolated_sample";
    case ErrorCode::non_finite: return "non_finite";
    case ErrorCode::degenerate_vector: return "degenerate_vector";
    case ErrorCode::degenerate_supervision: return "degenerate_supervision";
    case ErrorCode::internal_consistency: return "internal_consistency";
    case ErrorCode::no_scaling: return "no_scaling";
    case ErrorCode::non_normalizable: return "non_normalizable";
    case ErrorCode::non_binary_labels: return "non_binary_labels";
    case ErrorCode::zero_variance: return "zero_variance";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::empty_training: return "empty_training";
    case ErrorCode::split_failed: return "split_failed";
  }
  return "unknown";
}

}  // namespace featscale
