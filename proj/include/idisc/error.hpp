#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idisc {

enum class ErrorCode {
  too_few_points,
  non_finite_value,
  length_mismatch,
  bad_interval,
  bad_partitioning,
  k_zero,
  k_too_large,
  enumeration_too_large,
  out_of_range,
  file_not_found,
  column_not_found,
  bad_spec,
  write_failed,
  parse_failed,
};

// Coarse grouping used by the CLI to pick an exit status.
enum class ErrorClass { usage, data, capacity };

ErrorClass error_class(ErrorCode code) noexcept;
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorClass error_class() const noexcept { return idisc::error_class(code_); }

 private:
  ErrorCode code_;
};

}  // namespace idisc
