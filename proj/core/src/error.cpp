#include "lf/error.hpp"

namespace lf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateOverlap: return "DegenerateOverlap";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::AllCollinear: return "AllCollinear";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::FrameSearchExhausted: return "FrameSearchExhausted";
    case ErrorCode::GiveUp: return "GiveUp";
    case ErrorCode::RegularityViolated: return "RegularityViolated";
    case ErrorCode::EdgeHasCrossings: return "EdgeHasCrossings";
    case ErrorCode::MalformedSpec: return "MalformedSpec";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
    case ErrorCode::NotDescendingScene: return "NotDescendingScene";
    case ErrorCode::AssertionViolated: return "AssertionViolated";
    case ErrorCode::DependentVectors: return "DependentVectors";
    case ErrorCode::TriangleBlocked: return "TriangleBlocked";
    case ErrorCode::EdgeExists: return "EdgeExists";
    case ErrorCode::MissingEdge: return "MissingEdge";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::IOError: return "IOError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace lf
