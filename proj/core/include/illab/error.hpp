#pragma once

#include <stdexcept>
#include <string>

namespace illab {

enum class ErrorKind {
  CoincidentPoints,
  DegenerateDirections,
  NonConvergent,
  DuplicatePoints,
  CapTooSmall,
  NotHomogeneous,
  Parse,
  UnstableShape,
  IllConditionedGrid,
  AmbientMismatch,
  SanityViolation,
  ExtraCommonZeros,
  NotConverging,
  OriginSingularity,
  ZeroOnSphere,
  PoleHit,
  Config,
  Numeric
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace illab
