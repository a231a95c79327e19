#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ranstrat/cech.hpp"
#include "ranstrat/complexes.hpp"
#include "ranstrat/geometry.hpp"
#include "ranstrat/strat.hpp"

namespace ranstrat {

/// Default scan step for constancy checks in entrance_map.
inline constexpr double kDefaultResolution = 1e-3;

/**
 * Piecewise-linear path in Ran(R^d) x R_{>=0}, given as k labeled tracks
 * [0,1] -> R^d and a radius function, all linear between shared breakpoints
 * 0 = t_0 < ... < t_m = 1.
 *
 * Tracks may merge: once two tracks come within the dedupe tolerance they
 * must stay within it for the rest of the path. Separating tracks, and near
 * misses that dip under the tolerance and leave again, are rejected.
 */
class PLPath {
 public:
  /// tracks[k][j] is the position of track k at breakpoints[j].
  PLPath(std::size_t dim, std::vector<double> breakpoints, std::vector<std::vector<Point>> tracks,
         std::vector<double> radius, double dedupe_tol = kPointDedupe);

  std::size_t dim() const { return dim_; }
  std::size_t n_tracks() const { return tracks_.size(); }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<std::vector<Point>>& tracks() const { return tracks_; }
  const std::vector<double>& radius() const { return radius_; }
  double dedupe_tol() const { return dedupe_tol_; }

  Point track_at(std::size_t k, double t) const;
  double radius_at(double t) const;

  /// Bound on |d/dt| of every track and of the radius over [t0, t1].
  double speed_bound(double t0, double t1) const;

  /// The same path run backwards, t -> 1 - t.
  PLPath reversed() const;

  bool operator==(const PLPath&) const = default;

 private:
  // Segment index j with t in [t_j, t_{j+1}] and the local coordinate in [0, 1].
  std::pair<std::size_t, double> locate(double t) const;

  std::size_t dim_;
  std::vector<double> breakpoints_;
  std::vector<std::vector<Point>> tracks_;
  std::vector<double> radius_;
  double dedupe_tol_;
};

struct PathSample {
  RanPoint point;
  /// Vertex of `point.config` carrying each track.
  std::vector<Vertex> track_to_vertex;
};

PathSample sample(const PLPath& path, double t);

/// Track positions at t deduplicated into a configuration, plus radius(t).
RanPoint evaluate(const PLPath& path, double t);

struct Transition {
  double time;
  /// Label at the instant itself; both one-sided classes dominate it.
  StratumLabel label;
};

/**
 * Scans the path with step at most `resolution` and bisects every change of
 * Cech class. Every reported transition is a genuine change, but class
 * excursions narrower than the scan step can be missed.
 *
 * Bisection runs to width resolution * 1e-3 and then keeps going until the
 * far side lies inside the safe ball of the instant, so that entrance maps
 * into the instant exist. The instant is the bracket end whose class is
 * dominated by the other; PreconditionError if the sides are incomparable.
 */
std::vector<Transition> transitions(const PLPath& path, double resolution, const CechOptions& opts = {});

/**
 * Simplicial map Č(path(t_from)) -> Č(path(t_to)) induced by the stretch
 * between them, with the class constant except possibly at t_to. Works in
 * either time direction.
 *
 * When the class at t_to equals the class at t_from this is the track
 * renaming. Otherwise the stretch is split at t_b, chosen so that the tail
 * [t_b, t_to] stays in the safe ball of path(t_to); the result is the
 * renaming up to t_b followed by local_map into path(t_to).
 */
SimplicialMap entrance_map(const PLPath& path, double t_from, double t_to,
                           double resolution = kDefaultResolution, const CechOptions& opts = {});

struct ZigzagDiagram {
  std::vector<double> times;
  /// times.size() + 1 labels, sampled at interval midpoints.
  std::vector<StratumLabel> interval_classes;
  std::vector<StratumLabel> transition_classes;
  /// For transition j: (interval j -> instant j, interval j+1 -> instant j).
  std::vector<std::pair<SimplicialMap, SimplicialMap>> maps;
};

ZigzagDiagram zigzag(const PLPath& path, double resolution, const CechOptions& opts = {});

/// A nested chain complexes[0] ⊆ complexes[1] ⊆ ... on a common vertex set,
/// with the identity-on-vertices inclusions between neighbours.
struct FiltrationChain {
  std::vector<SimplicialComplex> complexes;
  std::vector<SimplicialMap> maps;
};

/// Nonempty iff every class in the zigzag has the same vertex count and the
/// classes form a chain under domination.
std::optional<FiltrationChain> as_filtration(const ZigzagDiagram& z);

/// Constant tracks at P with radius t / (1 - t) on [0, t_max], interpolated
/// to within 1e-6, and held at t_max / (1 - t_max) on [t_max, 1].
PLPath cech_path(const PointConfig& p, double t_max);

}  // namespace ranstrat
