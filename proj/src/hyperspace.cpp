#include "ultra/hyperspace.hpp"

#include <algorithm>

#include "ultra/error.hpp"

namespace ultra {

namespace {

Rational directed(const UltrametricSpace& s, std::span<const std::size_t> from, std::span<const std::size_t> to) {
  Rational worst;
  for (std::size_t p : from) {
    Rational nearest = s.distance(p, to.front());
    for (std::size_t q : to) nearest = std::min(nearest, s.distance(p, q));
    worst = std::max(worst, nearest);
  }
  return worst;
}

}  // namespace

Subset subset_of(const UltrametricSpace& space, std::span<const std::string> labels) {
  Subset out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(space.require_index(l));
  return out;
}

Rational hausdorff_distance(const UltrametricSpace& ambient, std::span<const std::size_t> a,
                            std::span<const std::size_t> b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::EmptySubset, {}, "Hausdorff distance needs nonempty sets");
  return std::max(directed(ambient, a, b), directed(ambient, b, a));
}

Subset epsilon_net(const UltrametricSpace& space, const Rational& eps) {
  if (!eps.is_positive()) throw Error(ErrorKind::NonpositiveScale, {eps.str()}, "net radius must be > 0");
  Subset net;
  for (std::size_t p = 0; p < space.size(); ++p) {
    const bool covered = std::any_of(net.begin(), net.end(), [&](std::size_t q) { return space.distance(p, q) <= eps; });
    if (!covered) net.push_back(p);
  }
  return net;
}

UltrametricSpace restrict_to(const UltrametricSpace& space, std::span<const std::size_t> subset) {
  if (subset.empty()) throw Error(ErrorKind::EmptySubset, {}, "cannot restrict to an empty subset");
  std::vector<std::string> labels;
  Matrix m;
  for (std::size_t i : subset) {
    labels.push_back(space.label(i));
    auto& row = m.emplace_back();
    for (std::size_t j : subset) row.push_back(space.distance(i, j));
  }
  // Revalidates so repeated indices surface as DuplicateLabel.
  return UltrametricSpace::validate(std::move(labels), m);
}

}  // namespace ultra
