#pragma once

#include <stdexcept>
#include <string>

namespace visguard {

enum class ErrorCode {
  InvalidInput,
  CollinearOverlap,
  TooFewVertices,
  DuplicateVertex,
  SelfIntersecting,
  QueryOutsidePolygon,
  SegmentOutsidePolygon,
  NoTargetView,
  NotWeaklyVisible,
  IterationCapExceeded,
  StalledWithoutProgress,
  GenerationBudgetExceeded,
  ParseError,
  IoError,
};

/// Library-wide exception carrying a machine-readable code (the CLI maps
/// codes to exit statuses).
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace visguard
