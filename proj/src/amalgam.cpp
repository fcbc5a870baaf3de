#include "ultra/amalgam.hpp"

#include <optional>

#include "ultra/error.hpp"

namespace ultra {

namespace {

struct ResolvedPair {
  std::size_t left;
  std::size_t right;
};

std::vector<ResolvedPair> resolve(const GlueSpec& spec) {
  if (spec.identify.empty()) {
    throw Error(ErrorKind::EmptyCommonPart, {}, "gluing needs at least one identified pair; use disjoint_amalgam");
  }
  std::vector<ResolvedPair> pairs;
  std::vector<std::optional<std::size_t>> left_used(spec.x1.size());
  std::vector<std::optional<std::size_t>> right_used(spec.x2.size());
  for (std::size_t k = 0; k < spec.identify.size(); ++k) {
    const auto& [l, r] = spec.identify[k];
    const std::size_t li = spec.x1.require_index(l);
    const std::size_t ri = spec.x2.require_index(r);
    if (left_used[li] || right_used[ri]) {
      throw Error(ErrorKind::DuplicateIdentification, {l, r}, "a point may be identified only once");
    }
    left_used[li] = k;
    right_used[ri] = k;
    pairs.push_back({li, ri});
  }
  for (const auto& p : pairs) {
    for (const auto& q : pairs) {
      if (spec.x1.distance(p.left, q.left) != spec.x2.distance(p.right, q.right)) {
        const std::string lp = spec.x1.label(p.left) + "~" + spec.x2.label(p.right);
        const std::string lq = spec.x1.label(q.left) + "~" + spec.x2.label(q.right);
        throw Error(ErrorKind::MetricMismatchOnA, {lp, lq},
                    "left distance " + spec.x1.distance(p.left, q.left).str() + " vs right distance " +
                        spec.x2.distance(p.right, q.right).str());
      }
    }
  }
  return pairs;
}

}  // namespace

UltrametricSpace glue(const GlueSpec& spec) {
  const auto pairs = resolve(spec);
  const auto& x1 = spec.x1;
  const auto& x2 = spec.x2;

  // Position of every right point in the output.
  std::vector<std::size_t> right_pos(x2.size());
  std::vector<bool> identified(x2.size(), false);
  for (const auto& p : pairs) {
    identified[p.right] = true;
    right_pos[p.right] = p.left;
  }
  std::vector<std::string> labels;
  for (const auto& l : x1.labels()) labels.push_back("L:" + l);
  std::vector<std::size_t> right_only;
  for (std::size_t j = 0; j < x2.size(); ++j) {
    if (identified[j]) continue;
    right_pos[j] = labels.size();
    labels.push_back("R:" + x2.label(j));
    right_only.push_back(j);
  }

  const std::size_t n = labels.size();
  std::vector<Rational> dist(n * n);
  for (std::size_t i = 0; i < x1.size(); ++i) {
    for (std::size_t j = 0; j < x1.size(); ++j) dist[i * n + j] = x1.distance(i, j);
  }
  for (std::size_t a : right_only) {
    for (std::size_t b : right_only) dist[right_pos[a] * n + right_pos[b]] = x2.distance(a, b);
  }
  for (std::size_t i = 0; i < x1.size(); ++i) {
    for (std::size_t j : right_only) {
      std::optional<Rational> best;
      for (const auto& p : pairs) {
        Rational through = std::max(x1.distance(i, p.left), x2.distance(p.right, j));
        if (!best || through < *best) best = std::move(through);
      }
      dist[i * n + right_pos[j]] = *best;
      dist[right_pos[j] * n + i] = *best;
    }
  }
  return UltrametricSpace::unchecked(std::move(labels), std::move(dist));
}

UltrametricSpace disjoint_amalgam(const UltrametricSpace& x, const UltrametricSpace& y, const Rational& s) {
  const Rational required = std::max(x.diameter(), y.diameter());
  if (!s.is_positive() || s < required) {
    throw Error(ErrorKind::ScaleTooSmall, {s.str(), required.str()},
                "cross distance must be positive and at least both diameters");
  }
  std::vector<std::string> labels;
  for (const auto& l : x.labels()) labels.push_back("L:" + l);
  for (const auto& l : y.labels()) labels.push_back("R:" + l);
  const std::size_t n = labels.size();
  const std::size_t m = x.size();
  std::vector<Rational> dist(n * n, s);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i < m && j < m) {
        dist[i * n + j] = x.distance(i, j);
      } else if (i >= m && j >= m) {
        dist[i * n + j] = y.distance(i - m, j - m);
      }
    }
  }
  return UltrametricSpace::unchecked(std::move(labels), std::move(dist));
}

UltrametricSpace chain_glue(const ChainSpec& chain) {
  if (chain.spaces.empty()) throw Error(ErrorKind::EmptyChain, {}, "nothing to glue");
  if (chain.links.size() + 1 != chain.spaces.size()) {
    throw Error(ErrorKind::ShapeMismatch, {std::to_string(chain.spaces.size()), std::to_string(chain.links.size())},
                "a chain of n spaces needs n - 1 links");
  }
  auto relabel = [](const UltrametricSpace& s, auto&& name) {
    std::vector<std::string> labels;
    std::vector<Rational> dist;
    for (std::size_t i = 0; i < s.size(); ++i) {
      labels.push_back(name(s.label(i)));
      for (std::size_t j = 0; j < s.size(); ++j) dist.push_back(s.distance(i, j));
    }
    return UltrametricSpace::unchecked(std::move(labels), std::move(dist));
  };

  UltrametricSpace acc = relabel(chain.spaces.front(), [](const std::string& l) { return "0:" + l; });
  for (std::size_t k = 0; k < chain.links.size(); ++k) {
    UltrametricSpace glued = [&] {
      try {
        return glue(GlueSpec{acc, chain.spaces[k + 1], chain.links[k]});
      } catch (const Error& e) {
        throw Error(e.kind(), e.witnesses(), "link " + std::to_string(k) + ": " + e.detail());
      }
    }();
    const std::string prefix = std::to_string(k + 1) + ":";
    acc = relabel(glued, [&](const std::string& l) {
      return l.starts_with("L:") ? l.substr(2) : prefix + l.substr(2);
    });
  }
  return acc;
}

}  // namespace ultra
