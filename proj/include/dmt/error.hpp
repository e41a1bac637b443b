#pragma once

#include <stdexcept>
#include <string>

namespace dmt {

enum class ErrorKind {
  malformed_simplex,
  unknown_simplex,
  incomplete_function,
  invalid_function,
  invalid_field,
  not_a_graph,
  size_guard,
  parse,
  dimension,
  overflow,
};

/// Library error carrying a machine-readable kind next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::malformed_simplex: return "malformed-simplex";
    case ErrorKind::unknown_simplex: return "unknown-simplex";
    case ErrorKind::incomplete_function: return "incomplete-function";
    case ErrorKind::invalid_function: return "invalid-function";
    case ErrorKind::invalid_field: return "invalid-field";
    case ErrorKind::not_a_graph: return "not-a-graph";
    case ErrorKind::size_guard: return "size-guard";
    case ErrorKind::parse: return "parse";
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::overflow: return "overflow";
  }
  return "error";
}

}  // namespace dmt
