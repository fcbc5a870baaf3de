#include "ultra/error.hpp"

namespace ultra {

namespace {

std::string render(ErrorKind kind, const std::vector<std::string>& witnesses, const std::string& detail) {
  std::string out(kind_name(kind));
  if (!witnesses.empty()) {
    out += '(';
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      if (i != 0) out += ", ";
      out += witnesses[i];
    }
    out += ')';
  }
  if (!detail.empty()) {
    out += ": ";
    out += detail;
  }
  return out;
}

}  // namespace

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::EmptySpace: return "EmptySpace";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::NonSymmetric: return "NonSymmetric";
    case ErrorKind::NegativeDistance: return "NegativeDistance";
    case ErrorKind::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case ErrorKind::TriangleViolation: return "TriangleViolation";
    case ErrorKind::MalformedTree: return "MalformedTree";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::NegativeScale: return "NegativeScale";
    case ErrorKind::NonpositiveScale: return "NonpositiveScale";
    case ErrorKind::EmptyCommonPart: return "EmptyCommonPart";
    case ErrorKind::MetricMismatchOnA: return "MetricMismatchOnA";
    case ErrorKind::DuplicateIdentification: return "DuplicateIdentification";
    case ErrorKind::ScaleTooSmall: return "ScaleTooSmall";
    case ErrorKind::EmptyChain: return "EmptyChain";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::NonpositiveDistance: return "NonpositiveDistance";
    case ErrorKind::ScaleNotBelowMinDistance: return "ScaleNotBelowMinDistance";
    case ErrorKind::BasePointMissing: return "BasePointMissing";
    case ErrorKind::LabelCollision: return "LabelCollision";
    case ErrorKind::InvalidCount: return "InvalidCount";
    case ErrorKind::InvalidConstraint: return "InvalidConstraint";
    case ErrorKind::ConstraintTooSmall: return "ConstraintTooSmall";
    case ErrorKind::NotAMetric: return "NotAMetric";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::vector<std::string> witnesses, const std::string& detail)
    : std::runtime_error(render(kind, witnesses, detail)),
      kind_(kind),
      witnesses_(std::move(witnesses)),
      detail_(detail) {}

}  // namespace ultra
