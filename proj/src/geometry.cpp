#include "ranstrat/geometry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <list>
#include <numeric>
#include <random>

#include "ranstrat/errors.hpp"

namespace ranstrat {

double distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

PointConfig::PointConfig(std::size_t dim, std::vector<Point> points, double dedupe_tol)
    : dim_(dim), points_(std::move(points)) {
  if (dim_ == 0) throw ValidationError("point dimension must be at least 1");
  if (points_.empty()) throw ValidationError("a configuration needs at least one point");
  for (const auto& p : points_) {
    if (p.size() != dim_) {
      throw ValidationError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                            std::to_string(dim_));
    }
    for (double x : p) {
      if (!std::isfinite(x)) throw ValidationError("point coordinates must be finite");
    }
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (distance(points_[i], points_[j]) <= dedupe_tol) {
        throw ValidationError("points " + std::to_string(i) + " and " + std::to_string(j) +
                              " coincide within the dedupe tolerance");
      }
    }
  }
}

std::pair<PointConfig, std::vector<std::size_t>> PointConfig::deduplicated(
    std::size_t dim, std::span<const Point> points, double dedupe_tol) {
  std::vector<Point> kept;
  std::vector<std::size_t> where(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto it = std::find_if(kept.begin(), kept.end(),
                           [&](const Point& k) { return distance(k, points[i]) <= dedupe_tol; });
    if (it == kept.end()) {
      where[i] = kept.size();
      kept.push_back(points[i]);
    } else {
      where[i] = static_cast<std::size_t>(it - kept.begin());
    }
  }
  return {PointConfig(dim, std::move(kept), dedupe_tol), std::move(where)};
}

std::vector<Point> PointConfig::select(std::span<const std::uint32_t> indices) const {
  std::vector<Point> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(points_.at(i));
  return out;
}

RanPoint::RanPoint(PointConfig config_, double radius_) : config(std::move(config_)), radius(radius_) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw ValidationError("radius must be a finite nonnegative number");
  }
}

bool Ball::contains(std::span<const double> p, double tol) const {
  return distance(center, p) <= radius + tol;
}

namespace {

void require_same_dim(const PointConfig& p, const PointConfig& q) {
  if (p.dim() != q.dim()) throw ValidationError("point configurations live in different dimensions");
}

double directed_hausdorff(const PointConfig& from, const PointConfig& to) {
  double worst = 0.0;
  for (const auto& p : from.points()) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : to.points()) best = std::min(best, distance(p, q));
    worst = std::max(worst, best);
  }
  return worst;
}

// Smallest ball with every support point on its boundary and center in their
// affine hull. Empty support gives radius -1 so that nothing is contained.
class SupportBall {
 public:
  explicit SupportBall(std::size_t dim) : dim_(dim) {}

  bool compute(const std::vector<const Point*>& support, Ball& out) const {
    const std::size_t k = support.size();
    if (k == 0) {
      out.center.assign(dim_, 0.0);
      out.radius = -1.0;
      return true;
    }
    const Point& p0 = *support[0];
    if (k == 1) {
      out.center = p0;
      out.radius = 0.0;
      return true;
    }
    Eigen::MatrixXd a(dim_, k - 1);
    Eigen::VectorXd rhs(k - 1);
    for (std::size_t i = 1; i < k; ++i) {
      for (std::size_t c = 0; c < dim_; ++c) a(c, i - 1) = (*support[i])[c] - p0[c];
      rhs(i - 1) = 0.5 * a.col(i - 1).squaredNorm();
    }
    const Eigen::MatrixXd gram = a.transpose() * a;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
    lu.setThreshold(1e-12);
    if (lu.rank() < static_cast<Eigen::Index>(k - 1)) return false;
    const Eigen::VectorXd offset = a * lu.solve(rhs);
    out.center.resize(dim_);
    for (std::size_t c = 0; c < dim_; ++c) out.center[c] = p0[c] + offset(c);
    out.radius = offset.norm();
    return true;
  }

 private:
  std::size_t dim_;
};

class MoveToFrontMeb {
 public:
  MoveToFrontMeb(std::span<const Point> points, std::size_t dim) : dim_(dim), support_ball_(dim) {
    std::vector<const Point*> order;
    for (const auto& p : points) order.push_back(&p);
    std::mt19937 rng(0x5eed);
    std::shuffle(order.begin(), order.end(), rng);
    list_.assign(order.begin(), order.end());
  }

  Ball solve() {
    std::vector<const Point*> support;
    return recurse(list_.end(), support);
  }

 private:
  bool inside(const Ball& b, const Point& p) const {
    return b.radius >= 0.0 && distance(b.center, p) <= b.radius + 1e-12 * (1.0 + b.radius);
  }

  Ball recurse(std::list<const Point*>::iterator end, std::vector<const Point*>& support) {
    Ball ball;
    support_ball_.compute(support, ball);
    if (support.size() == dim_ + 1) return ball;
    for (auto it = list_.begin(); it != end;) {
      auto next = std::next(it);
      if (!inside(ball, **it)) {
        support.push_back(*it);
        Ball probe;
        if (support_ball_.compute(support, probe)) {
          ball = recurse(it, support);
          list_.splice(list_.begin(), list_, it);
        }
        support.pop_back();
      }
      it = next;
    }
    return ball;
  }

  std::size_t dim_;
  SupportBall support_ball_;
  std::list<const Point*> list_;
};

}  // namespace

double hausdorff(const PointConfig& p, const PointConfig& q) {
  require_same_dim(p, q);
  return std::max(directed_hausdorff(p, q), directed_hausdorff(q, p));
}

double set_distance(const PointConfig& x, const PointConfig& y) {
  require_same_dim(x, y);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : x.points()) best = std::min(best, set_distance(y, p));
  return best;
}

double set_distance(const PointConfig& x, std::span<const double> y) {
  if (y.size() != x.dim()) throw ValidationError("point lives in a different dimension");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : x.points()) best = std::min(best, distance(p, y));
  return best;
}

double sup_distance(const RanPoint& a, const RanPoint& b) {
  return std::max(hausdorff(a.config, b.config), std::abs(a.radius - b.radius));
}

Ball meb(std::span<const Point> points) {
  if (points.empty()) throw ValidationError("minimum enclosing ball of an empty set");
  const std::size_t dim = points.front().size();
  Ball ball = MoveToFrontMeb(points, dim).solve();
  // The enclosing radius is the farthest distance from the chosen center,
  // which absorbs rounding in the support-ball solve.
  double r = 0.0;
  for (const auto& p : points) r = std::max(r, distance(ball.center, p));
  ball.radius = r;
  return ball;
}

Ball meb(const PointConfig& p) { return meb(std::span<const Point>(p.points())); }

Ball cech_set(const PointConfig& p) { return meb(p); }

double cech_radius(const PointConfig& p, double r, CechReading reading) {
  const Ball ball = meb(p);
  switch (reading) {
    case CechReading::critical_radius:
      return r - ball.radius;
    case CechReading::nearest_point:
      return r - set_distance(p, ball.center);
  }
  return r - ball.radius;
}

}  // namespace ranstrat
