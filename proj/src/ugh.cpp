#include "ultra/ugh.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <variant>

#include "ultra/error.hpp"
#include "ultra/hyperspace.hpp"

namespace ultra {

UghResult ugh_distance(const UltrametricSpace& x, const UltrametricSpace& y) {
  std::set<Rational> candidates;
  for (const auto& v : spectrum(x)) candidates.insert(v);
  for (const auto& v : spectrum(y)) candidates.insert(v);
  for (const auto& t : candidates) {
    QuotientSpace qx = closed_quotient(x, t);
    QuotientSpace qy = closed_quotient(y, t);
    if (auto phi = find_isometry(qx.quotient, qy.quotient)) {
      return UghResult{t, t, std::move(qx), std::move(qy), std::move(*phi)};
    }
  }
  // Unreachable: at the largest candidate both quotients are single points.
  throw std::logic_error("quotient scan found no isometric scale");
}

namespace {

// Exhaustive search over cross-distance matrices, working on ranks of the
// distinct values involved so every comparison is an integer comparison.
class OracleSearch {
 public:
  OracleSearch(const UltrametricSpace& x, const UltrametricSpace& y, const std::vector<Rational>& candidates)
      : n_(x.size()), m_(y.size()) {
    std::set<Rational> values(candidates.begin(), candidates.end());
    values.insert(Rational(0));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) values.insert(x.distance(i, j));
    }
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) values.insert(y.distance(i, j));
    }
    values_.assign(values.begin(), values.end());
    auto rank = [&](const Rational& v) {
      return static_cast<int>(std::lower_bound(values_.begin(), values_.end(), v) - values_.begin());
    };
    dx_.assign(n_ * n_, 0);
    dy_.assign(m_ * m_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) dx_[i * n_ + j] = rank(x.distance(i, j));
    }
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) dy_[i * m_ + j] = rank(y.distance(i, j));
    }
    cross_choices_.push_back(0);
    for (const auto& c : std::set<Rational>(candidates.begin(), candidates.end())) {
      if (c.is_positive()) cross_choices_.push_back(rank(c));
    }
    cross_.assign(n_ * m_, -1);
  }

  Rational run() {
    for (int h : cross_choices_) {
      bound_ = h;
      if (assign(0)) return values_[static_cast<std::size_t>(h)];
    }
    throw std::logic_error("oracle found no admissible cross matrix");
  }

 private:
  static bool isosceles(int a, int b, int c) {
    return std::max(a, b) >= c && std::max(a, c) >= b && std::max(b, c) >= a;
  }

  int cross(std::size_t i, std::size_t j) const { return cross_[i * m_ + j]; }

  bool consistent(std::size_t i, std::size_t j) const {
    const int v = cross(i, j);
    for (std::size_t k = 0; k < i; ++k) {
      if (!isosceles(dx_[i * n_ + k], v, cross(k, j))) return false;
    }
    for (std::size_t k = 0; k < j; ++k) {
      if (!isosceles(cross(i, k), v, dy_[j * m_ + k])) return false;
    }
    if (j + 1 == m_) {
      int nearest = cross(i, 0);
      for (std::size_t k = 1; k < m_; ++k) nearest = std::min(nearest, cross(i, k));
      if (nearest > bound_) return false;
    }
    if (i + 1 == n_) {
      int nearest = cross(0, j);
      for (std::size_t k = 1; k < n_; ++k) nearest = std::min(nearest, cross(k, j));
      if (nearest > bound_) return false;
    }
    return true;
  }

  bool assign(std::size_t pos) {
    if (pos == n_ * m_) return true;
    const std::size_t i = pos / m_;
    const std::size_t j = pos % m_;
    for (int v : cross_choices_) {
      cross_[pos] = v;
      if (consistent(i, j) && assign(pos + 1)) return true;
    }
    cross_[pos] = -1;
    return false;
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<Rational> values_;
  std::vector<int> dx_;
  std::vector<int> dy_;
  std::vector<int> cross_choices_;
  std::vector<int> cross_;
  int bound_ = 0;
};

}  // namespace

Rational ugh_oracle(const UltrametricSpace& x, const UltrametricSpace& y,
                    std::optional<std::vector<Rational>> candidates) {
  if (x.size() > kOracleMaxPoints || y.size() > kOracleMaxPoints) {
    throw Error(ErrorKind::InstanceTooLarge, {std::to_string(x.size()), std::to_string(y.size())},
                "exhaustive search is limited to " + std::to_string(kOracleMaxPoints) + " points per side");
  }
  if (!candidates) {
    candidates = spectrum(x);
    const auto sy = spectrum(y);
    candidates->insert(candidates->end(), sy.begin(), sy.end());
  }
  return OracleSearch(x, y, *candidates).run();
}

Certificate certificate(const UltrametricSpace& x, const UltrametricSpace& y, const UghResult& result) {
  const Rational& t = result.value;
  const auto& qx = result.quotient_x;
  const auto& qy = result.quotient_y;
  const PointMap& phi = result.quotient_isometry;
  PointMap phi_inverse(phi.size());
  for (std::size_t b = 0; b < phi.size(); ++b) phi_inverse[phi[b]] = b;

  Certificate cert{x, {}, {}, t};
  std::vector<std::string> labels;
  for (const auto& l : x.labels()) {
    labels.push_back("L:" + l);
    cert.embed_x[l] = "L:" + l;
  }

  if (t.is_zero()) {
    // Singleton blocks: phi is a point isometry and Z is X itself.
    for (std::size_t j = 0; j < y.size(); ++j) {
      const std::size_t xi = qx.blocks[phi_inverse[qy.block_of[j]]].front();
      cert.embed_y[y.label(j)] = labels[xi];
    }
    cert.z = UltrametricSpace::validate(labels, x.matrix());
    return cert;
  }

  for (const auto& l : y.labels()) {
    cert.embed_y[l] = "R:" + l;
    labels.push_back("R:" + l);
  }
  const std::size_t n = x.size();
  Matrix dist(labels.size(), std::vector<Rational>(labels.size()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dist[i][j] = x.distance(i, j);
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) dist[n + i][n + j] = y.distance(i, j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      const std::size_t bx = qx.block_of[i];
      const std::size_t matched = phi_inverse[qy.block_of[j]];
      const Rational d = matched == bx ? t : qx.quotient.distance(bx, matched);
      dist[i][n + j] = d;
      dist[n + j][i] = d;
    }
  }
  cert.z = UltrametricSpace::validate(std::move(labels), dist);
  return cert;
}

std::optional<std::string> verify_certificate(const UltrametricSpace& x, const UltrametricSpace& y,
                                              const Certificate& cert) {
  try {
    UltrametricSpace::validate(cert.z.labels(), cert.z.matrix());
  } catch (const Error& e) {
    return std::string("Z is not ultrametric: ") + e.what();
  }
  auto images = [&](const UltrametricSpace& s, const std::map<std::string, std::string>& embed,
                    const char* side) -> std::variant<Subset, std::string> {
    Subset image;
    for (const auto& l : s.labels()) {
      auto it = embed.find(l);
      if (it == embed.end()) return std::string(side) + " point '" + l + "' has no image";
      auto zi = cert.z.index_of(it->second);
      if (!zi) return std::string(side) + " image '" + it->second + "' is not a point of Z";
      image.push_back(*zi);
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (cert.z.distance(image[i], image[j]) != s.distance(i, j)) {
          return std::string(side) + " embedding distorts d(" + s.label(i) + "," + s.label(j) + ")";
        }
      }
    }
    return image;
  };
  auto ix = images(x, cert.embed_x, "X");
  if (auto* err = std::get_if<std::string>(&ix)) return *err;
  auto iy = images(y, cert.embed_y, "Y");
  if (auto* err = std::get_if<std::string>(&iy)) return *err;
  const Rational dh = hausdorff_distance(cert.z, std::get<Subset>(ix), std::get<Subset>(iy));
  if (dh != cert.achieved) {
    return "Hausdorff distance of the images is " + dh.str() + ", certificate claims " + cert.achieved.str();
  }
  return std::nullopt;
}

Rational spectrum_agreement(const UltrametricSpace& x, const UltrametricSpace& y) {
  const auto sx = spectrum(x);
  const auto sy = spectrum(y);
  std::vector<Rational> differ;
  std::set_symmetric_difference(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(differ));
  return differ.empty() ? Rational(0) : differ.back();
}

}  // namespace ultra
