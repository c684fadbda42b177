#pragma once

#include <stdexcept>
#include <string>

namespace twopath {

enum class ErrorKind {
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  NotADag,
  NotATree,
  TooLargeForExact,
  NoSinks,
  InvalidParams,
  MonotoneRejectionExhausted,
  Parse,
  Io,
  Unstable,
};

const char* to_string(ErrorKind kind);

// Every recoverable failure in the library surfaces as this exception; the
// kind lets the CLI map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace twopath
