#pragma once

#include <stdexcept>
#include <string>

namespace dthrot {

enum class ErrorKind {
  Parse,
  Range,
  Precondition,
  Capacity,
  Domain,
  Validation,
  InvalidArgument,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dthrot
