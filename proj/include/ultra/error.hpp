#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ultra {

enum class ErrorKind {
  // input parsing
  ParseError,
  ShapeMismatch,
  DuplicateLabel,
  UnknownLabel,
  EmptySpace,
  // ultrametric axioms
  NonzeroDiagonal,
  NonSymmetric,
  NegativeDistance,
  ZeroOffDiagonal,
  TriangleViolation,
  // dendrograms
  MalformedTree,
  // subsets and scales
  EmptySubset,
  NegativeScale,
  NonpositiveScale,
  // gluing
  EmptyCommonPart,
  MetricMismatchOnA,
  DuplicateIdentification,
  ScaleTooSmall,
  EmptyChain,
  // distances
  InstanceTooLarge,
  // generators
  NonpositiveDistance,
  ScaleNotBelowMinDistance,
  BasePointMissing,
  LabelCollision,
  InvalidCount,
  InvalidConstraint,
  ConstraintTooSmall,
  NotAMetric,
};

std::string_view kind_name(ErrorKind kind);

/// Domain error carrying a machine-readable kind and the witnesses that
/// triggered it (labels, indices or values, in the order the kind documents).
///
/// what() renders as `Kind(w1, w2, ...): detail`.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::vector<std::string> witnesses, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witnesses_;
  std::string detail_;
};

}  // namespace ultra
