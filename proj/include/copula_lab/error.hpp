#pragma once

#include <stdexcept>
#include <string>

namespace copula_lab {

enum class ErrorCode {
  domain = 1,
  parameter,
  count,
  shape,
  unsupported,
  ordering,
  comparison,
  degenerate_data,
  grid,
  numeric,
  config,
  io,
  parse,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception; the C API maps
// code() onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace copula_lab
