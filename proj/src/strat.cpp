#include "ranstrat/strat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ranstrat/errors.hpp"

namespace ranstrat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Subsets with at least two points and their signed Cech radius at r.
std::vector<std::pair<Simplex, double>> pair_and_larger_cech_radii(const PointConfig& p, double r,
                                                                  const CechOptions& opts) {
  std::vector<std::pair<Simplex, double>> out;
  if (p.size() < 2) return out;
  for (auto& s : subset_radii(p, opts)) {
    if (s.vertices.size() >= 2) out.emplace_back(std::move(s.vertices), r - s.radius);
  }
  return out;
}

}  // namespace

double r1(const PointConfig& p) {
  double best = kInf;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) best = std::min(best, distance(p[i], p[j]));
  }
  return best;
}

double r2(const PointConfig& p, double r, const CechOptions& opts) {
  double best = kInf;
  for (const auto& [s, cr] : pair_and_larger_cech_radii(p, r, opts)) best = std::min(best, 2.0 * std::abs(cr));
  return best;
}

double r2_prime(const PointConfig& p, double r, const CechOptions& opts) {
  double best = kInf;
  for (const auto& [s, cr] : pair_and_larger_cech_radii(p, r, opts)) {
    if (std::abs(cr) > opts.eps_geo) best = std::min(best, 2.0 * std::abs(cr));
  }
  return best;
}

SafeBall tilde_r(const RanPoint& x, const CechOptions& opts) {
  if (x.config.size() == 1) {
    const double r_tilde = 4.0 * std::max(x.radius, 1.0);
    return SafeBall{x, r_tilde, r_tilde / 4.0, SafeBallCase::generic};
  }
  const auto radii = pair_and_larger_cech_radii(x.config, x.radius, opts);
  bool boundary = false;
  double all = kInf, non_critical = kInf;
  for (const auto& [s, cr] : radii) {
    const double a = std::abs(cr);
    all = std::min(all, 2.0 * a);
    if (a <= opts.eps_geo) {
      boundary = true;
    } else {
      non_critical = std::min(non_critical, 2.0 * a);
    }
  }
  const double r_tilde = std::min(r1(x.config), boundary ? non_critical : all);
  return SafeBall{x, r_tilde, r_tilde / 4.0, boundary ? SafeBallCase::boundary : SafeBallCase::generic};
}

SimplicialMap local_map(const RanPoint& from, const SafeBall& to, const CechOptions& opts) {
  const double gap = sup_distance(from, to.center);
  if (!(gap < to.safe_radius)) {
    throw PreconditionError("sup distance " + std::to_string(gap) + " is not below the safe radius " +
                            std::to_string(to.safe_radius) + "; subdivide the move");
  }
  const PointConfig& target = to.center.config;
  const double reach = to.r_tilde / 4.0;
  std::vector<Vertex> vm;
  vm.reserve(from.config.size());
  for (const auto& q : from.config.points()) {
    std::optional<Vertex> hit;
    for (Vertex i = 0; i < target.size(); ++i) {
      if (distance(q, target[i]) < reach) {
        if (hit) throw PreconditionError("point lies in two safe balls; balls are not disjoint");
        hit = i;
      }
    }
    if (!hit) throw PreconditionError("point lies in no safe ball around the target configuration");
    vm.push_back(*hit);
  }
  return SimplicialMap(cech_complex(from, opts), cech_complex(to.center, opts), std::move(vm));
}

SimplicialMap local_map(const RanPoint& from, const RanPoint& to, const CechOptions& opts) {
  return local_map(from, tilde_r(to, opts), opts);
}

bool StratumLabel::whole_set_degenerate(std::size_t n_points) const {
  return std::any_of(degenerate_subsets.begin(), degenerate_subsets.end(),
                     [&](const Simplex& s) { return s.size() == n_points; });
}

StratumLabel stratum_label(const RanPoint& x, const CechOptions& opts) {
  StratumLabel label{canonical_form(cech_complex(x, opts)), false, {}};
  for (auto& [s, cr] : pair_and_larger_cech_radii(x.config, x.radius, opts)) {
    if (std::abs(cr) <= opts.eps_geo) label.degenerate_subsets.push_back(std::move(s));
  }
  label.degenerate = !label.degenerate_subsets.empty();
  return label;
}

}  // namespace ranstrat
