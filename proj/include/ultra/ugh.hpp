#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ultra/dendrogram.hpp"
#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

/// Outcome of the quotient scan.
///
/// `value` is the smallest t in {0} and both spectra at which the closed-ball
/// quotients of X and Y are isometric; `quotient_isometry[b]` is the Y block
/// matched to X block b at that scale.
struct UghResult {
  Rational value;
  Rational scale_witness;
  QuotientSpace quotient_x;
  QuotientSpace quotient_y;
  PointMap quotient_isometry;
};

/// Gromov-Hausdorff ultrametric between finite ultrametric spaces.
///
/// Scans the candidate scales {0} u spectrum(X) u spectrum(Y) upward and
/// stops at the first one where closed_quotient(X, t) and closed_quotient(Y, t)
/// are isometric. The scan always stops: at the larger diameter both
/// quotients are single points.
UghResult ugh_distance(const UltrametricSpace& x, const UltrametricSpace& y);

/// Largest instance the exhaustive oracle accepts, per side.
inline constexpr std::size_t kOracleMaxPoints = 4;

/// Exhaustive reference for ugh_distance.
///
/// Enumerates every cross-distance matrix between X and Y with entries from
/// {0} u `candidates` (default: both spectra) such that the combined matrix
/// on X u Y satisfies the strong triangle inequality, and returns the least
/// Hausdorff distance between the two halves. A zero cross entry identifies
/// a point of X with a point of Y. Shares no code with the quotient scan.
///
/// Throws InstanceTooLarge when either side exceeds kOracleMaxPoints.
Rational ugh_oracle(const UltrametricSpace& x, const UltrametricSpace& y,
                    std::optional<std::vector<Rational>> candidates = std::nullopt);

/// A common ultrametric space Z with isometric embeddings of X and Y whose
/// images are at Hausdorff distance `achieved`.
struct Certificate {
  UltrametricSpace z;
  std::map<std::string, std::string> embed_x;
  std::map<std::string, std::string> embed_y;
  Rational achieved;
};

/// Builds Z on X u Y from a scan result at scale t with block matching phi:
/// d(x, y) = t when phi([x]) = [y], otherwise the quotient distance between
/// [x] and phi^-1([y]). At t = 0 matched points are identified instead.
/// Z points are labelled "L:<x label>" and "R:<y label>".
Certificate certificate(const UltrametricSpace& x, const UltrametricSpace& y, const UghResult& result);

/// Re-checks a certificate from scratch: Z is ultrametric, both embeddings are
/// distance-preserving injections, and the Hausdorff distance of the images
/// equals `achieved`. Returns a description of the first failure, or nothing.
std::optional<std::string> verify_certificate(const UltrametricSpace& x, const UltrametricSpace& y,
                                              const Certificate& cert);

/// Smallest t with spectrum(X) and spectrum(Y) agreeing on (t, infinity).
Rational spectrum_agreement(const UltrametricSpace& x, const UltrametricSpace& y);

}  // namespace ultra
