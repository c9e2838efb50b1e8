#include "copula_lab/error.hpp"

namespace copula_lab {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::domain: return "domain error";
    case ErrorCode::parameter: return "parameter error";
    case ErrorCode::count: return "count error";
    case ErrorCode::shape: return "shape error";
    case ErrorCode::unsupported: return "unsupported operation";
    case ErrorCode::ordering: return "ordering error";
    case ErrorCode::comparison: return "comparison error";
    case ErrorCode::degenerate_data: return "degenerate data";
    case ErrorCode::grid: return "grid error";
    case ErrorCode::numeric: return "numeric error";
    case ErrorCode::config: return "config error";
    case ErrorCode::io: return "io error";
    case ErrorCode::parse: return "parse error";
  }
  return "unknown error";
}

}  // namespace copula_lab
