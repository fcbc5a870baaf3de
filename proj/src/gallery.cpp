#include "ultra/gallery.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "ultra/dendrogram.hpp"
#include "ultra/error.hpp"

namespace ultra {

SpectrumConstraint::SpectrumConstraint(std::vector<Rational> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (values_.empty() || !values_.front().is_zero()) {
    throw Error(ErrorKind::InvalidConstraint, {}, "K must contain 0 and no negative values");
  }
}

bool SpectrumConstraint::contains(const Rational& v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

UltrametricSpace two_point_space(const Rational& c) {
  if (!c.is_positive()) throw Error(ErrorKind::NonpositiveDistance, {c.str()}, "X_c needs c > 0");
  return UltrametricSpace::validate({"p", "q"}, {{Rational(0), c}, {c, Rational(0)}});
}

UltrametricSpace crowd_family(const UltrametricSpace& y, const std::string& base, const Rational& c, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidCount, {std::to_string(n)}, "the family starts at n = 1");
  const auto base_index = y.index_of(base);
  if (!base_index) throw Error(ErrorKind::BasePointMissing, {base}, "base point is not in Y");
  const auto floor = y.min_positive_distance();
  if (!c.is_positive() || (floor && c >= *floor)) {
    throw Error(ErrorKind::ScaleNotBelowMinDistance, {c.str(), floor ? floor->str() : "none"},
                "c must satisfy 0 < c < min nonzero distance of Y");
  }
  std::vector<std::string> labels = y.labels();
  for (int i = 1; i <= n; ++i) {
    std::string fresh = std::to_string(i);
    if (y.index_of(fresh)) throw Error(ErrorKind::LabelCollision, {fresh}, "Y already has a point with this label");
    labels.push_back(std::move(fresh));
  }
  const std::size_t m = y.size();
  const std::size_t total = labels.size();
  Matrix dist(total, std::vector<Rational>(total));
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      if (i == j) continue;
      if (i < m && j < m) {
        dist[i][j] = y.distance(i, j);
      } else if (i >= m && j >= m) {
        dist[i][j] = c;
      } else {
        const std::size_t old = i < m ? i : j;
        dist[i][j] = std::max(y.distance(old, *base_index), c);
      }
    }
  }
  return UltrametricSpace::validate(std::move(labels), dist);
}

UltrametricSpace cauchy_sequence(int depth) {
  if (depth < 0) throw Error(ErrorKind::InvalidCount, {std::to_string(depth)}, "depth must be >= 0");
  std::vector<Rational> points;
  Rational v(1);
  for (int i = 0; i <= depth; ++i) {
    points.push_back(v);
    v = v / Rational(2);
  }
  std::vector<std::string> labels;
  Matrix dist(points.size(), std::vector<Rational>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    labels.push_back(points[i].str());
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i != j) dist[i][j] = std::max(points[i], points[j]);
    }
  }
  return UltrametricSpace::validate(std::move(labels), dist);
}

MembershipResult in_uk(const UltrametricSpace& space, const SpectrumConstraint& k) {
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      if (!k.contains(space.distance(i, j))) {
        return {false, std::make_pair(space.label(i), space.label(j)), space.distance(i, j)};
      }
    }
  }
  return {};
}

namespace {

// std::uniform_int_distribution is implementation-defined; this is not.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t bound) {
    const std::uint64_t b = bound;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % b;
    std::uint64_t r = engine_();
    while (r >= limit) r = engine_();
    return static_cast<std::size_t>(r % b);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

DendrogramNode random_tree(std::vector<std::string> leaves, std::size_t height_limit,
                           const std::vector<Rational>& heights, Draw& draw) {
  if (leaves.size() == 1) return DendrogramNode::leaf(std::move(leaves.front()));
  const std::size_t h = draw.below(height_limit);
  DendrogramNode node{heights[h], {}, {}};
  if (h == 0) {
    for (auto& l : leaves) node.children.push_back(DendrogramNode::leaf(std::move(l)));
    return node;
  }
  draw.shuffle(leaves);
  const std::size_t groups = 2 + draw.below(leaves.size() - 1);
  std::vector<std::size_t> cuts(leaves.size() - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  draw.shuffle(cuts);
  cuts.resize(groups - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(leaves.size());
  std::size_t start = 0;
  for (std::size_t end : cuts) {
    std::vector<std::string> part(std::make_move_iterator(leaves.begin() + static_cast<std::ptrdiff_t>(start)),
                                  std::make_move_iterator(leaves.begin() + static_cast<std::ptrdiff_t>(end)));
    node.children.push_back(random_tree(std::move(part), h, heights, draw));
    start = end;
  }
  return node;
}

}  // namespace

UltrametricSpace random_space(int n, const SpectrumConstraint& k, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::InvalidCount, {std::to_string(n)}, "need at least one point");
  const std::vector<Rational> heights(k.values().begin() + 1, k.values().end());
  if (heights.empty()) throw Error(ErrorKind::ConstraintTooSmall, {}, "K needs a positive value");

  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  Draw draw(seed);
  const UltrametricSpace tree_order =
      from_dendrogram(Dendrogram{random_tree(labels, heights.size(), heights, draw)});

  std::vector<std::size_t> pos;
  for (const auto& l : labels) pos.push_back(tree_order.require_index(l));
  std::vector<Rational> dist;
  for (std::size_t a : pos) {
    for (std::size_t b : pos) dist.push_back(tree_order.distance(a, b));
  }
  return UltrametricSpace::unchecked(std::move(labels), std::move(dist));
}

UltrametricSpace single_linkage(std::vector<std::string> labels, const Matrix& metric) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorKind::EmptySpace, {}, "a space needs at least one point");
  if (metric.size() != n ||
      std::any_of(metric.begin(), metric.end(), [n](const auto& row) { return row.size() != n; })) {
    throw Error(ErrorKind::ShapeMismatch, {std::to_string(n)}, "metric must be an n x n matrix");
  }
  auto not_metric = [&](std::vector<std::string> w, const std::string& why) {
    return Error(ErrorKind::NotAMetric, std::move(w), why);
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!metric[i][i].is_zero()) throw not_metric({labels[i]}, "nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (metric[i][j] != metric[j][i]) throw not_metric({labels[i], labels[j]}, "not symmetric");
      if (!metric[i][j].is_positive()) throw not_metric({labels[i], labels[j]}, "distinct points need d > 0");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (metric[i][j] > metric[i][k] + metric[k][j]) {
          throw not_metric({labels[i], labels[j], labels[k]}, "triangle inequality fails");
        }
      }
    }
  }

  // Prim's minimum spanning tree, then the largest edge along each tree path.
  std::vector<std::vector<std::size_t>> tree(n);
  std::vector<bool> in_tree(n, false);
  std::vector<std::optional<Rational>> best(n);
  std::vector<std::size_t> parent(n, 0);
  best[0] = Rational(0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v] && best[v] && (u == n || *best[v] < *best[u])) u = v;
    }
    in_tree[u] = true;
    if (step > 0) {
      tree[u].push_back(parent[u]);
      tree[parent[u]].push_back(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v] && (!best[v] || metric[u][v] < *best[v])) {
        best[v] = metric[u][v];
        parent[v] = u;
      }
    }
  }
  std::vector<Rational> dist(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    std::vector<bool> seen(n, false);
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : tree[u]) {
        if (seen[v]) continue;
        seen[v] = true;
        dist[s * n + v] = std::max(dist[s * n + u], metric[u][v]);
        stack.push_back(v);
      }
    }
  }
  return UltrametricSpace::unchecked(std::move(labels), std::move(dist));
}

}  // namespace ultra
