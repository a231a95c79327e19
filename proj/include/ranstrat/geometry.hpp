#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ranstrat {

using Point = std::vector<double>;

/// Two points closer than this are the same point of a configuration.
inline constexpr double kPointDedupe = 1e-9;

/// Band around zero inside which a Cech radius counts as exactly critical.
inline constexpr double kEpsGeo = 1e-9;

double distance(std::span<const double> a, std::span<const double> b);

/**
 * Finite nonempty set of pairwise distinct points in R^dim, stored in a fixed
 * order so that point i is vertex i of any complex built on it.
 */
class PointConfig {
 public:
  /// Validates dim >= 1, nonempty, consistent coordinates, finite values and
  /// pairwise separation greater than `dedupe_tol`.
  PointConfig(std::size_t dim, std::vector<Point> points, double dedupe_tol = kPointDedupe);

  /// Merges points within `dedupe_tol` of an earlier kept point. Returns the
  /// configuration and, for every input point, the index it was merged into.
  static std::pair<PointConfig, std::vector<std::size_t>> deduplicated(
      std::size_t dim, std::span<const Point> points, double dedupe_tol = kPointDedupe);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  /// Points at the given indices, in the given order.
  std::vector<Point> select(std::span<const std::uint32_t> indices) const;

  bool operator==(const PointConfig&) const = default;

 private:
  std::size_t dim_;
  std::vector<Point> points_;
};

/// An element (P, r) of Ran(R^d) x R_{>=0}.
struct RanPoint {
  RanPoint(PointConfig config, double radius);

  PointConfig config;
  double radius;

  bool operator==(const RanPoint&) const = default;
};

struct Ball {
  Point center;
  double radius = 0.0;

  /// Closed-ball membership with absolute slack `tol`.
  bool contains(std::span<const double> p, double tol = 0.0) const;
};

double hausdorff(const PointConfig& p, const PointConfig& q);

/// Infimum of pairwise distances between the two sets.
double set_distance(const PointConfig& x, const PointConfig& y);

/// Distance from the nearest point of `x` to `y`.
double set_distance(const PointConfig& x, std::span<const double> y);

/// max(hausdorff(P, Q), |r - s|).
double sup_distance(const RanPoint& a, const RanPoint& b);

/// Smallest enclosing ball of a nonempty point list. Points may repeat.
/// Welzl's recursion with move-to-front on a deterministically shuffled copy.
Ball meb(std::span<const Point> points);
Ball meb(const PointConfig& p);

/// The Cech set of P': the center of the minimum enclosing ball, which is the
/// unique point of the intersection of the closed balls at the critical radius.
Ball cech_set(const PointConfig& p);

enum class CechReading {
  /// r minus the minimum enclosing radius (default; sign classifies the
  /// intersection of closed r-balls as empty / touching / open).
  critical_radius,
  /// r minus the distance from the nearest point of P' to the Cech set.
  nearest_point,
};

double cech_radius(const PointConfig& p, double r, CechReading reading = CechReading::critical_radius);

}  // namespace ranstrat
