#pragma once

#include <stdexcept>
#include <string>

namespace promptrend {

enum class ErrorKind {
  validation,
  not_found,
  config,
  io,
  state,
  internal,
};

// All library failures surface as Error; the C API maps kind to a return code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error validation_error(std::string message) {
  return Error(ErrorKind::validation, std::move(message));
}
inline Error not_found_error(std::string message) {
  return Error(ErrorKind::not_found, std::move(message));
}
inline Error config_error(std::string message) {
  return Error(ErrorKind::config, std::move(message));
}
inline Error io_error(std::string message) {
  return Error(ErrorKind::io, std::move(message));
}
inline Error state_error(std::string message) {
  return Error(ErrorKind::state, std::move(message));
}
inline Error internal_error(std::string message) {
  return Error(ErrorKind::internal, std::move(message));
}

}  // namespace promptrend
