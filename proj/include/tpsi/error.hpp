#pragma once

#include <stdexcept>
#include <string>

namespace tpsi {

enum class ErrorCode {
  invalid_modulus,
  singular_argument,
  singular_point,
  region_violation,
  undefined_argument,
  degenerate_trihedron,
  degenerate_angles,
  sampling_failure,
  plan_error,
  format_error,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tpsi
