#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lf {

enum class ErrorCode {
  DegenerateOverlap,
  DegenerateTriangle,
  AllCollinear,
  MalformedGraph6,
  Disconnected,
  NotGeneric,
  FrameSearchExhausted,
  GiveUp,
  RegularityViolated,
  EdgeHasCrossings,
  MalformedSpec,
  InvariantViolated,
  NotDescendingScene,
  AssertionViolated,
  DependentVectors,
  TriangleBlocked,
  EdgeExists,
  MissingEdge,
  NotBipartite,
  InvalidEmbedding,
  UnknownFixture,
  IOError,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lf
