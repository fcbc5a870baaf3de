#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ultra/rational.hpp"

namespace ultra {

using Matrix = std::vector<std::vector<Rational>>;

/// A finite ultrametric space: distinct labels plus an exact distance matrix
/// obeying d(x,y) <= max(d(x,z), d(z,y)).
///
/// Instances are immutable. The only ways to obtain one are validate(), which
/// checks every axiom, and unchecked(), reserved for constructions whose
/// output is ultrametric by construction (quotients, dendrogram expansion,
/// single linkage).
class UltrametricSpace {
 public:
  /// Checks shape, label uniqueness, then the axioms in this order: zero
  /// diagonal, symmetry, positivity off the diagonal, strong triangle
  /// inequality. Throws ultra::Error naming the first violation; a
  /// TriangleViolation(i, j, k) means d(i,j) > max(d(i,k), d(k,j)).
  static UltrametricSpace validate(std::vector<std::string> labels, const Matrix& matrix);

  /// Caller guarantees the axioms. `dist` is row-major, size n*n.
  static UltrametricSpace unchecked(std::vector<std::string> labels, std::vector<Rational> dist);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  /// Like index_of but throws UnknownLabel.
  std::size_t require_index(const std::string& label) const;

  const Rational& distance(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }
  Matrix matrix() const;

  Rational diameter() const;
  /// Smallest nonzero distance; empty for a one-point space.
  std::optional<Rational> min_positive_distance() const;

  bool operator==(const UltrametricSpace& other) const = default;

 private:
  UltrametricSpace(std::vector<std::string> labels, std::vector<Rational> dist);

  std::vector<std::string> labels_;
  std::vector<Rational> dist_;
  std::map<std::string, std::size_t> index_;
};

/// Collapses points at distance 0 onto the first of them. The input must be a
/// pseudo-ultrametric (all axioms except positivity); otherwise the same
/// errors as UltrametricSpace::validate are raised against the raw matrix.
UltrametricSpace merge_duplicates(std::vector<std::string> labels, const Matrix& matrix);

/// Sorted distinct distance values, always starting with 0.
using Spectrum = std::vector<Rational>;

Spectrum spectrum(const UltrametricSpace& space);

/// Partition of a space into closed balls of radius `scale`.
///
/// blocks are ordered by their smallest member; the quotient point for a block
/// carries the label of that member.
struct QuotientSpace {
  UltrametricSpace source;
  Rational scale;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of;
  UltrametricSpace quotient;
};

/// Throws NegativeScale when t < 0.
QuotientSpace closed_quotient(const UltrametricSpace& space, const Rational& t);

}  // namespace ultra
