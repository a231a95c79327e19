#include "ranstrat/paths.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "ranstrat/errors.hpp"
#include "ranstrat/scposet.hpp"

namespace ranstrat {

namespace {

double dot(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Point sub(const Point& a, const Point& b) {
  Point d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw ValidationError(std::string(what) + " must be finite");
}

// Tracks in each vertex of the complex at t, written with the smallest track
// index standing for its vertex. Two samples with the same track-labeled
// complex are related by the identity on tracks.
std::set<Simplex> track_labeled(const PathSample& s, const SimplicialComplex& c) {
  std::vector<Vertex> rep(s.point.config.size(), 0);
  std::vector<bool> seen(rep.size(), false);
  for (Vertex k = 0; k < s.track_to_vertex.size(); ++k) {
    const Vertex v = s.track_to_vertex[k];
    if (!seen[v]) {
      seen[v] = true;
      rep[v] = k;
    }
  }
  std::set<Simplex> out;
  for (const auto& simplex : c.simplices()) {
    Simplex t;
    for (Vertex v : simplex) t.push_back(rep[v]);
    std::sort(t.begin(), t.end());
    out.insert(std::move(t));
  }
  return out;
}

SimplicialMap rename(const PathSample& a, const SimplicialComplex& ca, const PathSample& b,
                     const SimplicialComplex& cb) {
  std::vector<Vertex> vm(a.point.config.size());
  std::vector<bool> set(vm.size(), false);
  for (std::size_t k = 0; k < a.track_to_vertex.size(); ++k) {
    const Vertex va = a.track_to_vertex[k];
    const Vertex vb = b.track_to_vertex[k];
    if (set[va] && vm[va] != vb) throw PreconditionError("merged tracks separate along the path");
    vm[va] = vb;
    set[va] = true;
  }
  return SimplicialMap(ca, cb, std::move(vm));
}

std::size_t scan_steps(double resolution) {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) throw ValidationError("resolution must be positive");
  return static_cast<std::size_t>(std::ceil(1.0 / resolution));
}

class ClassCache {
 public:
  bool dominated(const IsoClass& upper, const IsoClass& lower) {
    const auto key = std::make_pair(upper.key(), lower.key());
    auto it = dom_.find(key);
    if (it == dom_.end()) {
      it = dom_.emplace(key, dominates(upper.canonical(), lower.canonical()).has_value()).first;
    }
    return it->second;
  }

 private:
  std::map<std::pair<std::string, std::string>, bool> dom_;
};

}  // namespace

PLPath::PLPath(std::size_t dim, std::vector<double> breakpoints, std::vector<std::vector<Point>> tracks,
               std::vector<double> radius, double dedupe_tol)
    : dim_(dim),
      breakpoints_(std::move(breakpoints)),
      tracks_(std::move(tracks)),
      radius_(std::move(radius)),
      dedupe_tol_(dedupe_tol) {
  if (dim_ == 0) throw ValidationError("dim must be at least 1");
  const std::size_t m = breakpoints_.size();
  if (m < 2) throw ValidationError("a path needs at least two breakpoints");
  if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0) {
    throw ValidationError("breakpoints must run from 0 to 1");
  }
  for (std::size_t j = 0; j + 1 < m; ++j) {
    check_finite(breakpoints_[j], "breakpoint");
    if (!(breakpoints_[j] < breakpoints_[j + 1])) throw ValidationError("breakpoints must be strictly increasing");
  }
  if (tracks_.empty()) throw ValidationError("a path needs at least one track");
  if (radius_.size() != m) throw ValidationError("radius needs one value per breakpoint");
  for (double r : radius_) {
    check_finite(r, "radius");
    if (r < 0.0) throw ValidationError("radius must be nonnegative");
  }
  for (const auto& track : tracks_) {
    if (track.size() != m) throw ValidationError("each track needs one position per breakpoint");
    for (const auto& p : track) {
      if (p.size() != dim_) throw ValidationError("track position has the wrong dimension");
      for (double c : p) check_finite(c, "coordinate");
    }
  }
  // On each segment the difference of two tracks is affine, so its norm is
  // convex and the set where it is within tolerance is an interval.
  for (std::size_t j = 0; j + 1 < m; ++j) {
    for (std::size_t k = 0; k < tracks_.size(); ++k) {
      for (std::size_t l = k + 1; l < tracks_.size(); ++l) {
        const Point d0 = sub(tracks_[k][j], tracks_[l][j]);
        const Point d1 = sub(tracks_[k][j + 1], tracks_[l][j + 1]);
        const Point e = sub(d1, d0);
        const double ee = dot(e, e);
        const double u = ee > 0.0 ? std::clamp(-dot(d0, e) / ee, 0.0, 1.0) : 0.0;
        Point closest = d0;
        for (std::size_t i = 0; i < dim_; ++i) closest[i] += u * e[i];
        const double nearest = std::sqrt(dot(closest, closest));
        const double end = std::sqrt(dot(d1, d1));
        if (nearest <= dedupe_tol_ && end > dedupe_tol_) {
          throw ValidationError("tracks " + std::to_string(k) + " and " + std::to_string(l) +
                                " meet and separate again on segment " + std::to_string(j));
        }
      }
    }
  }
}

std::pair<std::size_t, double> PLPath::locate(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw ValidationError("path time must lie in [0, 1]");
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  std::size_t j = static_cast<std::size_t>(it - breakpoints_.begin());
  j = j == 0 ? 0 : j - 1;
  if (j + 1 >= breakpoints_.size()) j = breakpoints_.size() - 2;
  const double u = (t - breakpoints_[j]) / (breakpoints_[j + 1] - breakpoints_[j]);
  return {j, std::clamp(u, 0.0, 1.0)};
}

Point PLPath::track_at(std::size_t k, double t) const {
  const auto [j, u] = locate(t);
  const Point& a = tracks_.at(k)[j];
  const Point& b = tracks_[k][j + 1];
  Point p(dim_);
  for (std::size_t i = 0; i < dim_; ++i) p[i] = u == 1.0 ? b[i] : a[i] + u * (b[i] - a[i]);
  return p;
}

double PLPath::radius_at(double t) const {
  const auto [j, u] = locate(t);
  if (u == 1.0) return radius_[j + 1];
  return std::max(0.0, radius_[j] + u * (radius_[j + 1] - radius_[j]));
}

double PLPath::speed_bound(double t0, double t1) const {
  if (t0 > t1) std::swap(t0, t1);
  double best = 0.0;
  for (std::size_t j = 0; j + 1 < breakpoints_.size(); ++j) {
    if (breakpoints_[j + 1] < t0 || breakpoints_[j] > t1) continue;
    const double dt = breakpoints_[j + 1] - breakpoints_[j];
    best = std::max(best, std::abs(radius_[j + 1] - radius_[j]) / dt);
    for (const auto& track : tracks_) best = std::max(best, distance(track[j], track[j + 1]) / dt);
  }
  return best;
}

PLPath PLPath::reversed() const {
  std::vector<double> bp(breakpoints_.size());
  for (std::size_t j = 0; j < bp.size(); ++j) bp[j] = 1.0 - breakpoints_[bp.size() - 1 - j];
  bp.front() = 0.0;
  bp.back() = 1.0;
  auto tracks = tracks_;
  for (auto& t : tracks) std::reverse(t.begin(), t.end());
  std::vector<double> radius(radius_.rbegin(), radius_.rend());
  return PLPath(dim_, std::move(bp), std::move(tracks), std::move(radius), dedupe_tol_);
}

PathSample sample(const PLPath& path, double t) {
  std::vector<Point> pts;
  pts.reserve(path.n_tracks());
  for (std::size_t k = 0; k < path.n_tracks(); ++k) pts.push_back(path.track_at(k, t));
  auto [config, index] = PointConfig::deduplicated(path.dim(), pts, path.dedupe_tol());
  std::vector<Vertex> t2v(index.begin(), index.end());
  return PathSample{RanPoint(std::move(config), path.radius_at(t)), std::move(t2v)};
}

RanPoint evaluate(const PLPath& path, double t) { return sample(path, t).point; }

namespace {

class TransitionFinder {
 public:
  TransitionFinder(const PLPath& path, double resolution, const CechOptions& opts)
      : path_(path), resolution_(resolution), opts_(opts) {}

  std::vector<Transition> run() {
    const std::size_t n = scan_steps(resolution_);
    std::vector<double> ts(n + 1);
    std::vector<IsoClass> cls;
    for (std::size_t i = 0; i <= n; ++i) {
      ts[i] = i == n ? 1.0 : static_cast<double>(i) / static_cast<double>(n);
      cls.push_back(class_at(ts[i]));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!(cls[i] == cls[i + 1])) pending_.push_back({ts[i], ts[i + 1], cls[i], cls[i + 1]});
    }
    while (!pending_.empty()) {
      Bracket b = pending_.back();
      pending_.pop_back();
      locate(b);
    }
    std::sort(found_.begin(), found_.end(),
              [](const Transition& a, const Transition& b) { return a.time < b.time; });
    // A lower class touched at a single instant shows up from both sides.
    std::vector<Transition> out;
    for (auto& tr : found_) {
      if (!out.empty() && std::abs(out.back().time - tr.time) <= resolution_ * 1e-3 &&
          out.back().label.cls == tr.label.cls) {
        continue;
      }
      out.push_back(std::move(tr));
    }
    return out;
  }

 private:
  struct Bracket {
    double lo, hi;
    IsoClass c_lo, c_hi;
  };

  IsoClass class_at(double t) { return canonical_form(cech_complex(evaluate(path_, t), opts_)); }

  void locate(Bracket b) {
    const double width = resolution_ * 1e-3;
    for (;;) {
      const bool lo_instant = cache_.dominated(b.c_hi, b.c_lo);
      const bool hi_instant = cache_.dominated(b.c_lo, b.c_hi);
      const double mid = 0.5 * (b.lo + b.hi);
      const bool exhausted = mid <= b.lo || mid >= b.hi;
      if ((lo_instant || hi_instant) && (b.hi - b.lo <= width || exhausted)) {
        const double t_inst = hi_instant ? b.hi : b.lo;
        const double t_far = hi_instant ? b.lo : b.hi;
        const RanPoint inst = evaluate(path_, t_inst);
        const SafeBall ball = tilde_r(inst, opts_);
        if (exhausted || sup_distance(evaluate(path_, t_far), inst) < ball.safe_radius) {
          found_.push_back({t_inst, stratum_label(inst, opts_)});
          return;
        }
      } else if (exhausted) {
        throw PreconditionError("classes on the two sides of a transition are incomparable");
      }
      IsoClass c = class_at(mid);
      if (c == b.c_lo) {
        b.lo = mid;
      } else if (c == b.c_hi) {
        b.hi = mid;
      } else {
        pending_.push_back({mid, b.hi, c, b.c_hi});
        b.hi = mid;
        b.c_hi = std::move(c);
      }
    }
  }

  const PLPath& path_;
  double resolution_;
  CechOptions opts_;
  ClassCache cache_;
  std::vector<Bracket> pending_;
  std::vector<Transition> found_;
};

// Checks that the track-labeled complex is the same at every scan point of
// [a, b] (either order) as at a.
void require_constant(const PLPath& path, double a, double b, double resolution, const CechOptions& opts) {
  const PathSample s0 = sample(path, a);
  const auto ref = track_labeled(s0, cech_complex(s0.point, opts));
  const double span = std::abs(b - a);
  const std::size_t n = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(span / resolution)));
  for (std::size_t i = 1; i <= n; ++i) {
    const double t = i == n ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
    const PathSample s = sample(path, t);
    if (track_labeled(s, cech_complex(s.point, opts)) != ref) {
      throw PreconditionError("Cech complex changes between t = " + std::to_string(a) + " and t = " +
                              std::to_string(t));
    }
  }
}

}  // namespace

std::vector<Transition> transitions(const PLPath& path, double resolution, const CechOptions& opts) {
  return TransitionFinder(path, resolution, opts).run();
}

SimplicialMap entrance_map(const PLPath& path, double t_from, double t_to, double resolution,
                           const CechOptions& opts) {
  scan_steps(resolution);
  const PathSample from = sample(path, t_from);
  const PathSample to = sample(path, t_to);
  const SimplicialComplex c_from = cech_complex(from.point, opts);
  const SimplicialComplex c_to = cech_complex(to.point, opts);
  if (t_from == t_to) return rename(from, c_from, to, c_to);

  if (canonical_form(c_from) == canonical_form(c_to)) {
    require_constant(path, t_from, t_to, resolution, opts);
    return rename(from, c_from, to, c_to);
  }

  const SafeBall ball = tilde_r(to.point, opts);
  const double gap = std::abs(t_to - t_from);
  const double speed = path.speed_bound(t_from, t_to);
  const double step = speed > 0.0 ? std::min(gap, 0.9 * ball.safe_radius / speed) : gap;
  const double t_b = t_to > t_from ? t_to - step : t_to + step;
  require_constant(path, t_from, t_b, resolution, opts);
  const PathSample mid = sample(path, t_b);
  const SimplicialComplex c_mid = cech_complex(mid.point, opts);
  return compose(rename(from, c_from, mid, c_mid), local_map(mid.point, ball, opts));
}

ZigzagDiagram zigzag(const PLPath& path, double resolution, const CechOptions& opts) {
  ZigzagDiagram z;
  const auto found = transitions(path, resolution, opts);
  std::vector<double> bounds{0.0};
  for (const auto& tr : found) {
    z.times.push_back(tr.time);
    z.transition_classes.push_back(tr.label);
    bounds.push_back(tr.time);
  }
  bounds.push_back(1.0);
  std::vector<double> mids;
  for (std::size_t j = 0; j + 1 < bounds.size(); ++j) {
    mids.push_back(0.5 * (bounds[j] + bounds[j + 1]));
    z.interval_classes.push_back(stratum_label(evaluate(path, mids.back()), opts));
  }
  for (std::size_t j = 0; j < z.times.size(); ++j) {
    z.maps.emplace_back(entrance_map(path, mids[j], z.times[j], resolution, opts),
                        entrance_map(path, mids[j + 1], z.times[j], resolution, opts));
  }
  return z;
}

std::optional<FiltrationChain> as_filtration(const ZigzagDiagram& z) {
  std::vector<IsoClass> classes;
  auto add = [&](const IsoClass& c) {
    if (std::find(classes.begin(), classes.end(), c) == classes.end()) classes.push_back(c);
  };
  for (const auto& l : z.interval_classes) add(l.cls);
  for (const auto& l : z.transition_classes) add(l.cls);
  if (classes.empty()) return std::nullopt;
  const std::size_t n = classes.front().vertex_count();
  for (const auto& c : classes) {
    if (c.vertex_count() != n) return std::nullopt;
  }
  // With a common vertex count a strictly larger class has fewer simplices.
  std::sort(classes.begin(), classes.end(), [](const IsoClass& a, const IsoClass& b) {
    if (a.canonical().size() != b.canonical().size()) return a.canonical().size() < b.canonical().size();
    return a < b;
  });
  FiltrationChain chain;
  chain.complexes.push_back(classes.front().canonical());
  for (std::size_t i = 1; i < classes.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!dominates(classes[j].canonical(), classes[i].canonical())) return std::nullopt;
    }
    const auto g = dominates(chain.complexes.back(), classes[i].canonical());
    std::vector<Vertex> inverse(n);
    for (Vertex v = 0; v < n; ++v) inverse[g->vertex_map()[v]] = v;
    chain.complexes.push_back(classes[i].canonical().relabeled(inverse));
    SimplicialMap inc = identity_map(chain.complexes[i - 1]);
    chain.maps.emplace_back(chain.complexes[i - 1], chain.complexes[i], inc.vertex_map());
  }
  return chain;
}

PLPath cech_path(const PointConfig& p, double t_max) {
  if (!(t_max > 0.0 && t_max < 1.0)) throw ValidationError("t_max must lie in (0, 1)");
  constexpr double kErr = 1e-6;
  auto f = [](double t) { return t / (1.0 - t); };
  std::vector<double> bp{0.0};
  double t = 0.0;
  while (t < t_max) {
    // Linear interpolation error on [t, t + h] is at most h^2/8 * max f'',
    // with f'' = 2 / (1 - s)^3 largest at the right end.
    double h = std::sqrt(4.0 * kErr * std::pow(1.0 - t, 3));
    while (h > 0.0 && h * h / 8.0 * 2.0 / std::pow(1.0 - std::min(t + h, t_max), 3) > kErr) h *= 0.9;
    t = std::min(t + h, t_max);
    if (t_max - t < 1e-12) t = t_max;
    bp.push_back(t);
  }
  std::vector<double> radius;
  for (double s : bp) radius.push_back(f(s));
  bp.push_back(1.0);
  radius.push_back(f(t_max));
  std::vector<std::vector<Point>> tracks;
  for (const auto& q : p.points()) tracks.emplace_back(bp.size(), q);
  return PLPath(p.dim(), std::move(bp), std::move(tracks), std::move(radius));
}

}  // namespace ranstrat
