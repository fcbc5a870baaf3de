#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

/// Node of a merge tree. A leaf has no children, height 0 and a point label;
/// an internal node has at least two children, each strictly lower.
struct DendrogramNode {
  Rational height;
  std::string label;
  std::vector<DendrogramNode> children;

  bool is_leaf() const { return children.empty(); }
  std::size_t leaf_count() const;

  static DendrogramNode leaf(std::string label) { return DendrogramNode{Rational(0), std::move(label), {}}; }

  bool operator==(const DendrogramNode& other) const = default;
};

struct Dendrogram {
  DendrogramNode root;

  bool operator==(const Dendrogram& other) const = default;
};

/// Builds the merge tree of a space. The result is canonical: see canonicalize().
Dendrogram to_dendrogram(const UltrametricSpace& space);

/// Expands a merge tree into its lowest-common-ancestor metric. Points appear
/// in depth-first leaf order. Throws MalformedTree on a non-decreasing edge, a
/// unary node, a nonzero leaf height, or a repeated leaf label.
UltrametricSpace from_dendrogram(const Dendrogram& dendrogram);

/// Sorts every child list by (height, leaf count, shape encoding).
Dendrogram canonicalize(Dendrogram dendrogram);

/// Label-free encoding of the tree shape and heights; equal encodings of
/// canonical trees mean isometric spaces.
std::string shape_encoding(const DendrogramNode& node);

/// Distance-preserving bijection, as image[i] = index in the target space.
using PointMap = std::vector<std::size_t>;

/// Isometry test by canonical form comparison; returns a witness when the
/// spaces are isometric.
std::optional<PointMap> find_isometry(const UltrametricSpace& x, const UltrametricSpace& y);

inline bool isometric(const UltrametricSpace& x, const UltrametricSpace& y) {
  return find_isometry(x, y).has_value();
}

}  // namespace ultra
