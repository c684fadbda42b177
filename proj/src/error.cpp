#include "twopath/error.hpp"

namespace twopath {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::NotADag: return "NotADag";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::TooLargeForExact: return "TooLargeForExact";
    case ErrorKind::NoSinks: return "NoSinks";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::MonotoneRejectionExhausted: return "MonotoneRejectionExhausted";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Unstable: return "Unstable";
  }
  return "Unknown";
}

}  // namespace twopath
