#include "ultra/space.hpp"

#include <algorithm>

#include "ultra/error.hpp"

namespace ultra {

namespace {

void check_shape(const std::vector<std::string>& labels, const Matrix& matrix) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorKind::EmptySpace, {}, "a space needs at least one point");
  if (matrix.size() != n) {
    throw Error(ErrorKind::ShapeMismatch, {std::to_string(n), std::to_string(matrix.size())},
                "matrix row count differs from label count");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) {
      throw Error(ErrorKind::ShapeMismatch, {std::to_string(i)}, "row " + std::to_string(i) + " has " +
                                                                     std::to_string(matrix[i].size()) +
                                                                     " entries, expected " + std::to_string(n));
    }
  }
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (auto [it, fresh] = seen.emplace(labels[i], i); !fresh) {
      throw Error(ErrorKind::DuplicateLabel, {labels[i]},
                  "positions " + std::to_string(it->second) + " and " + std::to_string(i));
    }
  }
}

std::string d_str(const std::vector<std::string>& l, const Matrix& m, std::size_t i, std::size_t j) {
  return "d(" + l[i] + "," + l[j] + ") = " + m[i][j].str();
}

// Every axiom except positivity off the diagonal.
void check_pseudo_axioms(const std::vector<std::string>& labels, const Matrix& m, bool allow_zero) {
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i][i].is_zero()) throw Error(ErrorKind::NonzeroDiagonal, {labels[i]}, d_str(labels, m, i, i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m[i][j] != m[j][i]) {
        throw Error(ErrorKind::NonSymmetric, {labels[i], labels[j]},
                    d_str(labels, m, i, j) + " but " + d_str(labels, m, j, i));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m[i][j].is_negative()) {
        throw Error(ErrorKind::NegativeDistance, {labels[i], labels[j]}, d_str(labels, m, i, j));
      }
      if (!allow_zero && m[i][j].is_zero()) {
        throw Error(ErrorKind::ZeroOffDiagonal, {labels[i], labels[j]}, "distinct points at distance 0");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (m[i][j] > std::max(m[i][k], m[k][j])) {
          throw Error(ErrorKind::TriangleViolation, {labels[i], labels[j], labels[k]},
                      d_str(labels, m, i, j) + " > max(" + d_str(labels, m, i, k) + ", " +
                          d_str(labels, m, k, j) + ")");
        }
      }
    }
  }
}

std::vector<Rational> flatten(const Matrix& matrix) {
  std::vector<Rational> flat;
  flat.reserve(matrix.size() * matrix.size());
  for (const auto& row : matrix) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

}  // namespace

UltrametricSpace::UltrametricSpace(std::vector<std::string> labels, std::vector<Rational> dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
}

UltrametricSpace UltrametricSpace::validate(std::vector<std::string> labels, const Matrix& matrix) {
  check_shape(labels, matrix);
  check_pseudo_axioms(labels, matrix, /*allow_zero=*/false);
  return UltrametricSpace(std::move(labels), flatten(matrix));
}

UltrametricSpace UltrametricSpace::unchecked(std::vector<std::string> labels, std::vector<Rational> dist) {
  return UltrametricSpace(std::move(labels), std::move(dist));
}

std::optional<std::size_t> UltrametricSpace::index_of(const std::string& label) const {
  if (auto it = index_.find(label); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t UltrametricSpace::require_index(const std::string& label) const {
  if (auto idx = index_of(label)) return *idx;
  throw Error(ErrorKind::UnknownLabel, {label}, "no such point");
}

Matrix UltrametricSpace::matrix() const {
  Matrix m(size());
  for (std::size_t i = 0; i < size(); ++i) {
    m[i].assign(dist_.begin() + static_cast<std::ptrdiff_t>(i * size()),
                dist_.begin() + static_cast<std::ptrdiff_t>((i + 1) * size()));
  }
  return m;
}

Rational UltrametricSpace::diameter() const {
  Rational best;
  for (const auto& d : dist_) best = std::max(best, d);
  return best;
}

std::optional<Rational> UltrametricSpace::min_positive_distance() const {
  std::optional<Rational> best;
  for (const auto& d : dist_) {
    if (d.is_positive() && (!best || d < *best)) best = d;
  }
  return best;
}

UltrametricSpace merge_duplicates(std::vector<std::string> labels, const Matrix& matrix) {
  check_shape(labels, matrix);
  check_pseudo_axioms(labels, matrix, /*allow_zero=*/true);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const bool duplicate =
        std::any_of(keep.begin(), keep.end(), [&](std::size_t k) { return matrix[i][k].is_zero(); });
    if (!duplicate) keep.push_back(i);
  }
  std::vector<std::string> kept_labels;
  std::vector<Rational> dist;
  for (std::size_t i : keep) {
    kept_labels.push_back(labels[i]);
    for (std::size_t j : keep) dist.push_back(matrix[i][j]);
  }
  return UltrametricSpace::unchecked(std::move(kept_labels), std::move(dist));
}

Spectrum spectrum(const UltrametricSpace& space) {
  Spectrum values{Rational(0)};
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) values.push_back(space.distance(i, j));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

QuotientSpace closed_quotient(const UltrametricSpace& space, const Rational& t) {
  if (t.is_negative()) throw Error(ErrorKind::NegativeScale, {t.str()}, "quotient scale must be >= 0");
  const std::size_t n = space.size();
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of(n);
  // Closed t-balls partition an ultrametric space, so comparing against each
  // block's first member suffices.
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::find_if(blocks.begin(), blocks.end(),
                           [&](const auto& block) { return space.distance(i, block.front()) <= t; });
    if (it == blocks.end()) {
      block_of[i] = blocks.size();
      blocks.push_back({i});
    } else {
      block_of[i] = static_cast<std::size_t>(it - blocks.begin());
      it->push_back(i);
    }
  }
  std::vector<std::string> labels;
  std::vector<Rational> dist;
  for (const auto& a : blocks) {
    labels.push_back(space.label(a.front()));
    for (const auto& b : blocks) dist.push_back(space.distance(a.front(), b.front()));
  }
  return QuotientSpace{space, t, std::move(blocks), std::move(block_of),
                       UltrametricSpace::unchecked(std::move(labels), std::move(dist))};
}

}  // namespace ultra
