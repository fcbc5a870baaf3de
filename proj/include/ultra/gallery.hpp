#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

/// Allowed distance values K: sorted, distinct, nonnegative, containing 0.
class SpectrumConstraint {
 public:
  /// Sorts and deduplicates; throws InvalidConstraint on a negative value or
  /// a missing 0.
  explicit SpectrumConstraint(std::vector<Rational> values);

  const std::vector<Rational>& values() const { return values_; }
  bool contains(const Rational& v) const;

 private:
  std::vector<Rational> values_;
};

/// Two points "p", "q" at distance c. Throws NonpositiveDistance.
UltrametricSpace two_point_space(const Rational& c);

/// Y plus n fresh points "1".."n" with
///   rho(i, j) = c             for fresh i != j,
///   rho(y, i) = max(d(y, base), c).
/// Requires 0 < c < min nonzero distance of Y and n >= 1.
UltrametricSpace crowd_family(const UltrametricSpace& y, const std::string& base, const Rational& c, int n);

/// Points 1, 1/2, ..., 2^-depth (labelled by their value) with
/// d(a, b) = max(a, b).
UltrametricSpace cauchy_sequence(int depth);

struct MembershipResult {
  bool member = true;
  /// First pair (in storage order) whose distance is outside K.
  std::optional<std::pair<std::string, std::string>> witness;
  std::optional<Rational> offending_value;
};

MembershipResult in_uk(const UltrametricSpace& space, const SpectrumConstraint& k);

/// Seeded random space with n points "x0".."x<n-1>" and spectrum inside K,
/// built from a random merge tree. Identical arguments give identical output
/// on every platform. Throws ConstraintTooSmall when K has no positive value,
/// InvalidCount when n < 1.
UltrametricSpace random_space(int n, const SpectrumConstraint& k, std::uint64_t seed);

/// Subdominant (single-linkage) ultrametric of an arbitrary finite metric:
/// d(x, y) = min over paths of the largest step. Throws NotAMetric when the
/// input is not symmetric, has a nonzero diagonal, a nonpositive off-diagonal
/// entry, or breaks the ordinary triangle inequality.
UltrametricSpace single_linkage(std::vector<std::string> labels, const Matrix& metric);

}  // namespace ultra
