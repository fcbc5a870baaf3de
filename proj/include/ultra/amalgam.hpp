#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

/// Pairs (label in the left space, label in the right space) naming the
/// common part A.
using Identification = std::vector<std::pair<std::string, std::string>>;

struct GlueSpec {
  UltrametricSpace x1;
  UltrametricSpace x2;
  Identification identify;
};

/// Amalgamation of two ultrametric spaces along a common subspace A:
///
///   d(x1, x2) = min over a in A of max(d1(x1, a), d2(a, x2)).
///
/// Left points are labelled "L:<label>", unidentified right points
/// "R:<label>"; an identified pair keeps its left label. Left points come
/// first, then the remaining right points, each in their original order.
///
/// Throws EmptyCommonPart, UnknownLabel, DuplicateIdentification, or
/// MetricMismatchOnA when the two metrics disagree on A.
UltrametricSpace glue(const GlueSpec& spec);

/// X and Y side by side with every cross distance equal to s. Requires
/// s > 0 and s >= both diameters (ScaleTooSmall otherwise). Labels as in glue().
UltrametricSpace disjoint_amalgam(const UltrametricSpace& x, const UltrametricSpace& y, const Rational& s);

/// spaces[0], spaces[1], ... glued left to right. links[k] identifies points
/// of the accumulated space with points of spaces[k + 1].
///
/// The accumulated space labels a point "<i>:<label>" where i is the index of
/// the space that contributed it, so links[k] refers to those names on the
/// left and to plain labels of spaces[k + 1] on the right.
struct ChainSpec {
  std::vector<UltrametricSpace> spaces;
  std::vector<Identification> links;
};

/// Left fold of glue(). Throws EmptyChain for no spaces, ShapeMismatch when
/// links.size() != spaces.size() - 1, and glue errors prefixed with the link
/// index.
UltrametricSpace chain_glue(const ChainSpec& chain);

}  // namespace ultra
