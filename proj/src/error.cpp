#include "ocpoly/error.hpp"

namespace ocpoly {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DirectedCycle: return "DirectedCycle";
    case ErrorKind::TransitiveCover: return "TransitiveCover";
    case ErrorKind::DuplicateCover: return "DuplicateCover";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::NotZigzag: return "NotZigzag";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyPolytope: return "EmptyPolytope";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::NotChainUnion: return "NotChainUnion";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::PartialPartition: return "PartialPartition";
    case ErrorKind::ConflictingAssignment: return "ConflictingAssignment";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace ocpoly
