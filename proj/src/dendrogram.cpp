#include "ultra/dendrogram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "ultra/error.hpp"

namespace ultra {

namespace {

DendrogramNode build(const UltrametricSpace& space, std::vector<std::size_t> members) {
  if (members.size() == 1) return DendrogramNode::leaf(space.label(members.front()));
  Rational top;
  for (std::size_t a : members) {
    for (std::size_t b : members) top = std::max(top, space.distance(a, b));
  }
  // Points strictly closer than the top height form the children; "< top" is
  // an equivalence relation in an ultrametric space.
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t p : members) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return space.distance(p, g.front()) < top; });
    if (it == groups.end()) {
      groups.push_back({p});
    } else {
      it->push_back(p);
    }
  }
  DendrogramNode node{top, {}, {}};
  for (auto& g : groups) node.children.push_back(build(space, std::move(g)));
  return node;
}

// Canonicalizes in place and returns the node's shape encoding.
std::string canonicalize_node(DendrogramNode& node) {
  if (node.is_leaf()) return "*";
  struct Keyed {
    Rational height;
    std::size_t leaves;
    std::string encoding;
    DendrogramNode node;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(node.children.size());
  for (auto& child : node.children) {
    std::string enc = canonicalize_node(child);
    keyed.push_back({child.height, child.leaf_count(), std::move(enc), std::move(child)});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.height, a.leaves, a.encoding) < std::tie(b.height, b.leaves, b.encoding);
  });
  std::string encoding = node.height.str() + "[";
  node.children.clear();
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i != 0) encoding += ',';
    encoding += keyed[i].encoding;
    node.children.push_back(std::move(keyed[i].node));
  }
  encoding += ']';
  return encoding;
}

[[noreturn]] void malformed(const std::string& detail) { throw Error(ErrorKind::MalformedTree, {}, detail); }

void check_node(const DendrogramNode& node) {
  if (node.is_leaf()) {
    if (!node.height.is_zero()) malformed("leaf '" + node.label + "' has height " + node.height.str());
    return;
  }
  if (node.children.size() < 2) malformed("internal node at height " + node.height.str() + " has one child");
  if (!node.height.is_positive()) malformed("internal node height " + node.height.str() + " is not positive");
  for (const auto& child : node.children) {
    if (child.height >= node.height) {
      malformed("edge from height " + node.height.str() + " down to " + child.height.str() + " does not decrease");
    }
    check_node(child);
  }
}

void collect_leaves(const DendrogramNode& node, std::vector<std::string>& out) {
  if (node.is_leaf()) {
    out.push_back(node.label);
    return;
  }
  for (const auto& child : node.children) collect_leaves(child, out);
}

// Fills distances between leaves under `node`, whose leaves occupy positions
// [first, first + leaf_count) in depth-first order.
void fill_distances(const DendrogramNode& node, std::size_t first, std::size_t n, std::vector<Rational>& dist) {
  if (node.is_leaf()) return;
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::size_t offset = first;
  for (const auto& child : node.children) {
    const std::size_t count = child.leaf_count();
    spans.emplace_back(offset, offset + count);
    fill_distances(child, offset, n, dist);
    offset += count;
  }
  for (std::size_t a = 0; a < spans.size(); ++a) {
    for (std::size_t b = 0; b < spans.size(); ++b) {
      if (a == b) continue;
      for (std::size_t i = spans[a].first; i < spans[a].second; ++i) {
        for (std::size_t j = spans[b].first; j < spans[b].second; ++j) dist[i * n + j] = node.height;
      }
    }
  }
}

}  // namespace

std::size_t DendrogramNode::leaf_count() const {
  if (is_leaf()) return 1;
  std::size_t total = 0;
  for (const auto& child : children) total += child.leaf_count();
  return total;
}

Dendrogram to_dendrogram(const UltrametricSpace& space) {
  std::vector<std::size_t> all(space.size());
  std::iota(all.begin(), all.end(), 0);
  return canonicalize(Dendrogram{build(space, std::move(all))});
}

Dendrogram canonicalize(Dendrogram dendrogram) {
  canonicalize_node(dendrogram.root);
  return dendrogram;
}

std::string shape_encoding(const DendrogramNode& node) {
  DendrogramNode copy = node;
  return canonicalize_node(copy);
}

UltrametricSpace from_dendrogram(const Dendrogram& dendrogram) {
  check_node(dendrogram.root);
  std::vector<std::string> labels;
  collect_leaves(dendrogram.root, labels);
  std::map<std::string, int> seen;
  for (const auto& l : labels) {
    if (++seen[l] > 1) malformed("leaf label '" + l + "' appears more than once");
  }
  const std::size_t n = labels.size();
  std::vector<Rational> dist(n * n);
  fill_distances(dendrogram.root, 0, n, dist);
  return UltrametricSpace::unchecked(std::move(labels), std::move(dist));
}

std::optional<PointMap> find_isometry(const UltrametricSpace& x, const UltrametricSpace& y) {
  if (x.size() != y.size()) return std::nullopt;
  DendrogramNode tx = to_dendrogram(x).root;
  DendrogramNode ty = to_dendrogram(y).root;
  if (shape_encoding(tx) != shape_encoding(ty)) return std::nullopt;
  // Canonical trees with equal encodings match leaf-for-leaf in depth-first
  // order; tied siblings are identical subtrees.
  std::vector<std::string> lx;
  std::vector<std::string> ly;
  collect_leaves(tx, lx);
  collect_leaves(ty, ly);
  PointMap image(x.size());
  for (std::size_t k = 0; k < lx.size(); ++k) image[x.require_index(lx[k])] = y.require_index(ly[k]);
  return image;
}

}  // namespace ultra
