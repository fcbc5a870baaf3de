#pragma once

// Test-only helpers: compact space literals, seeded generators, and brute-force
// reference computations that deliberately avoid the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ultra/amalgam.hpp"
#include "ultra/error.hpp"
#include "ultra/gallery.hpp"
#include "ultra/hyperspace.hpp"
#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra::testing {

inline Rational q(const char* text) { return Rational::parse(text); }

/// Space from labels and an upper-triangular list of distances, row by row:
/// {d01, d02, ..., d12, ...}.
inline UltrametricSpace make_space(std::vector<std::string> labels, std::initializer_list<const char*> upper) {
  const std::size_t n = labels.size();
  Matrix m(n, std::vector<Rational>(n));
  auto it = upper.begin();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m[i][j] = m[j][i] = Rational::parse(*it++);
    }
  }
  return UltrametricSpace::validate(std::move(labels), m);
}

/// d(a,b) = 1, d(a,c) = d(b,c) = 2.
inline UltrametricSpace isosceles() { return make_space({"a", "b", "c"}, {"1", "2", "2"}); }

/// Checks every axiom through the validating constructor.
inline bool passes_validation(const UltrametricSpace& s) {
  try {
    UltrametricSpace::validate(s.labels(), s.matrix());
    return true;
  } catch (const Error&) {
    return false;
  }
}

/// Isometry by trying every bijection.
inline bool brute_isometric(const UltrametricSpace& x, const UltrametricSpace& y) {
  if (x.size() != y.size()) return false;
  std::vector<std::size_t> perm(x.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) {
      for (std::size_t j = 0; j < x.size() && ok; ++j) ok = x.distance(i, j) == y.distance(perm[i], perm[j]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Hausdorff distance as the least eps in {0} u spectrum with each set inside
/// the closed eps-neighbourhood of the other.
inline Rational brute_hausdorff(const UltrametricSpace& s, const Subset& a, const Subset& b) {
  auto inside = [&](const Subset& from, const Subset& to, const Rational& eps) {
    return std::all_of(from.begin(), from.end(), [&](std::size_t p) {
      return std::any_of(to.begin(), to.end(), [&](std::size_t r) { return s.distance(p, r) <= eps; });
    });
  };
  for (const auto& eps : spectrum(s)) {
    if (inside(a, b, eps) && inside(b, a, eps)) return eps;
  }
  throw std::logic_error("no eps found");
}

inline std::vector<Rational> parse_all(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(Rational::parse(v));
  return out;
}

/// Seeded source of random spaces and subsets for property tests.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(engine_); }

  UltrametricSpace space(int max_points, const SpectrumConstraint& k) {
    return random_space(1 + static_cast<int>(below(static_cast<std::size_t>(max_points))), k, engine_());
  }

  Subset nonempty_subset(std::size_t n) {
    Subset out;
    while (out.empty()) {
      out.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (below(2) == 1) out.push_back(i);
      }
    }
    return out;
  }

  /// Relabels with a prefix and shuffles point order.
  UltrametricSpace shuffled(const UltrametricSpace& s, const std::string& prefix) {
    std::vector<std::size_t> perm(s.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), engine_);
    std::vector<std::string> labels;
    Matrix m(s.size(), std::vector<Rational>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
      labels.push_back(prefix + s.label(perm[i]));
      for (std::size_t j = 0; j < s.size(); ++j) m[i][j] = s.distance(perm[i], perm[j]);
    }
    return UltrametricSpace::validate(std::move(labels), m);
  }

  /// Hangs a new point below an existing one at a height drawn from K:
  /// d(new, z) = max(r, d(anchor, z)).
  UltrametricSpace extend(const UltrametricSpace& s, const SpectrumConstraint& k, const std::string& label) {
    const auto& values = k.values();
    const Rational r = values[1 + below(values.size() - 1)];
    const std::size_t anchor = below(s.size());
    const std::size_t n = s.size();
    std::vector<std::string> labels = s.labels();
    labels.push_back(label);
    Matrix m = s.matrix();
    for (auto& row : m) row.emplace_back();
    m.emplace_back(n + 1);
    for (std::size_t z = 0; z < n; ++z) m[n][z] = m[z][n] = std::max(r, s.distance(anchor, z));
    return UltrametricSpace::validate(std::move(labels), m);
  }

  /// Random valid GlueSpec with both sides at most `max_points` points.
  ///
  /// Either X2 is a subspace of X1 grown by random extensions and glued along
  /// that whole subspace, or X1 and X2 are overlapping subspaces of a common
  /// host glued along a random part of the overlap.
  GlueSpec glue_spec(int max_points, const SpectrumConstraint& k) {
    const auto limit = static_cast<std::size_t>(max_points);
    if (below(2) == 0) {
      const UltrametricSpace x1 = shuffled(space(max_points, k), "");
      const Subset common = nonempty_subset(x1.size());
      UltrametricSpace x2 = restrict_to(x1, common);
      const std::size_t extra = below(limit - x2.size() + 1);
      for (std::size_t e = 0; e < extra; ++e) x2 = extend(x2, k, "e" + std::to_string(e));
      Identification identify;
      for (std::size_t i : common) identify.emplace_back(x1.label(i), "r" + x1.label(i));
      return GlueSpec{x1, shuffled(x2, "r"), identify};
    }
    const UltrametricSpace host = space(max_points, k);
    Subset left = nonempty_subset(host.size());
    Subset right = nonempty_subset(host.size());
    const std::size_t pivot = left[below(left.size())];
    if (std::find(right.begin(), right.end(), pivot) == right.end()) {
      right.push_back(pivot);
      std::sort(right.begin(), right.end());
    }
    Identification identify;
    for (std::size_t i : left) {
      const bool shared = std::find(right.begin(), right.end(), i) != right.end();
      if (shared && (i == pivot || below(2) == 0)) identify.emplace_back(host.label(i), "r" + host.label(i));
    }
    std::shuffle(identify.begin(), identify.end(), engine_);
    return GlueSpec{shuffled(restrict_to(host, left), ""), shuffled(restrict_to(host, right), "r"), identify};
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ultra::testing
