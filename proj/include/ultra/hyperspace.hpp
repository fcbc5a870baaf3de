#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

/// Point subset of a space, by index.
using Subset = std::vector<std::size_t>;

/// Resolves labels to indices; throws UnknownLabel.
Subset subset_of(const UltrametricSpace& space, std::span<const std::string> labels);

/// max(max_a min_b d(a,b), max_b min_a d(a,b)). Throws EmptySubset.
Rational hausdorff_distance(const UltrametricSpace& ambient, std::span<const std::size_t> a,
                            std::span<const std::size_t> b);

/// Greedy epsilon-net: walks the points in storage order and keeps a point
/// when no kept point lies within eps. The net covers at radius eps and is
/// eps-separated. Throws NonpositiveScale when eps <= 0.
Subset epsilon_net(const UltrametricSpace& space, const Rational& eps);

/// Induced subspace; points keep their relative order. Throws EmptySubset.
UltrametricSpace restrict_to(const UltrametricSpace& space, std::span<const std::size_t> subset);

}  // namespace ultra
