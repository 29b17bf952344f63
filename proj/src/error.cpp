#include "ivpp/error.hpp"

namespace ivpp {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Indeterminate: return "Indeterminate";
    case ErrorKind::InfiniteCoordinate: return "InfiniteCoordinate";
    case ErrorKind::SemanticError: return "SemanticError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DegenerateBranch: return "DegenerateBranch";
    case ErrorKind::ZeroR: return "ZeroR";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::NonRealBoundary: return "NonRealBoundary";
    case ErrorKind::NoClosure: return "NoClosure";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::UnsupportedPeriod: return "UnsupportedPeriod";
    case ErrorKind::DegenerateX: return "DegenerateX";
  }
  return "Unknown";
}

}  // namespace ivpp
