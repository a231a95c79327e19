#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ranstrat/complexes.hpp"
#include "ranstrat/geometry.hpp"

namespace ranstrat {

/// Configurations up to this size may omit max_dim; above it the subset
/// enumeration (2^|P|) must be capped explicitly.
inline constexpr std::size_t kUncappedPointLimit = 8;

struct CechOptions {
  /// Largest simplex dimension considered; unset means |P| - 1.
  std::optional<std::size_t> max_dim;
  /// Slack for "meb radius <= r" and for deciding a Cech radius is zero.
  double eps_geo = kEpsGeo;
};

/// Largest subset size to enumerate for a configuration of `n_points`.
/// Throws ValidationError when n_points > kUncappedPointLimit without max_dim.
std::size_t max_subset_size(std::size_t n_points, const CechOptions& opts);

/// A vertex subset of a configuration together with its minimum enclosing radius.
struct SubsetRadius {
  Simplex vertices;
  double radius;
};

/// Every subset with 1..max_subset_size points, in SimplexLess order.
std::vector<SubsetRadius> subset_radii(const PointConfig& p, const CechOptions& opts = {});

/**
 * Cech complex of (P, r): vertex i is P[i], and a subset spans a simplex iff
 * its minimum enclosing radius is at most r + eps_geo (closed balls).
 * Candidates are generated level by level from present faces, so the output
 * is downward closed even under rounding.
 */
SimplicialComplex cech_complex(const RanPoint& x, const CechOptions& opts = {});

struct Filtration {
  PointConfig config;
  /// Ascending, deduplicated within eps_geo; the first entry is 0.
  std::vector<double> critical_radii;
  /// complexes[i] is the Cech complex on [critical_radii[i], critical_radii[i+1]).
  std::vector<SimplicialComplex> complexes;
};

Filtration cech_filtration(const PointConfig& p, const CechOptions& opts = {});

}  // namespace ranstrat
