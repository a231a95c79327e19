#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ranstrat/cech.hpp"
#include "ranstrat/complexes.hpp"
#include "ranstrat/geometry.hpp"

namespace ranstrat {

/// Minimum pairwise distance; +infinity for a single point.
double r1(const PointConfig& p);

/// Minimum over subsets with at least two points of 2 |cech_radius(P', r)|.
/// Zero exactly when some subset is critical at r. +infinity for one point.
double r2(const PointConfig& p, double r, const CechOptions& opts = {});

/// As r2 but skipping subsets whose Cech radius is within eps_geo of zero;
/// +infinity when every subset is critical.
double r2_prime(const PointConfig& p, double r, const CechOptions& opts = {});

enum class SafeBallCase { generic, boundary };

/// Open sup-norm ball around (P, r) inside which every Cech class dominates
/// the class at the center.
struct SafeBall {
  RanPoint center;
  double r_tilde;
  /// r_tilde / 4.
  double safe_radius;
  SafeBallCase kind;
};

/**
 * Neighborhood radius at x = (P, r).
 *
 * generic:  no subset is critical, r_tilde = min(r1, r2).
 * boundary: some subset is critical, r_tilde = min(r1, r2_prime).
 * A single point has no pairwise constraint; r_tilde = 4 max(r, 1) there.
 */
SafeBall tilde_r(const RanPoint& x, const CechOptions& opts = {});

/**
 * The vertex map Q -> P sending each point of `from` to the unique point of
 * `to` within r_tilde/4, as a map between the two Cech complexes.
 *
 * Throws PreconditionError unless sup_distance(from, to) is strictly below
 * the safe radius of `to`.
 */
SimplicialMap local_map(const RanPoint& from, const RanPoint& to, const CechOptions& opts = {});

/// Same as above with a precomputed safe ball for `to`.
SimplicialMap local_map(const RanPoint& from, const SafeBall& to, const CechOptions& opts = {});

struct StratumLabel {
  IsoClass cls;
  bool degenerate = false;
  /// Subsets with at least two points whose Cech radius is within eps_geo of 0.
  std::vector<Simplex> degenerate_subsets;

  /// True when the whole configuration is critical (the coarser refinement
  /// that only looks at P itself).
  bool whole_set_degenerate(std::size_t n_points) const;
};

StratumLabel stratum_label(const RanPoint& x, const CechOptions& opts = {});

// ---------------------------------------------------------------------------
// Frontier condition

enum class LabelMode {
  /// Strata are fibers of the Cech class.
  coarse,
  /// Critical points (degenerate flag) form their own strata.
  refined,
};

/**
 * A region of Ran(R^d) x R_{>=0} to sample, given as a box of parameters and
 * a realization map. `candidates` are tested as potential witnesses before any
 * random search.
 */
struct StratumSampler {
  std::vector<std::pair<double, double>> bounds;
  std::function<RanPoint(std::span<const double>)> realize;
  std::vector<RanPoint> candidates;
};

/// The family {0, x} in R with x in [0.5, 1.5] and r in [0, 1], seeded with
/// the two witnesses ({0,1}, 0.5) and ({0,1}, 0.6).
StratumSampler two_point_line_family();

enum class FrontierVerdict { violated, satisfied_at_budget, inconclusive };

const char* to_string(FrontierVerdict v);

struct FrontierReport {
  std::string label_a;
  std::string label_b;
  FrontierVerdict verdict = FrontierVerdict::inconclusive;
  /// A point of stratum b with points of stratum a at every probed scale.
  std::optional<RanPoint> boundary_witness;
  /// A point of stratum b whose probe ball contains no point of stratum a.
  std::optional<RanPoint> interior_witness;
  std::size_t evaluations = 0;
};

/**
 * Monte-Carlo search for a frontier-condition violation between the strata of
 * classes `a` and `b` (with b below a). In refined mode both strata exclude
 * their critical points.
 *
 * Candidates of stratum b come from the sampler's seed list and from
 * bisecting between random a- and b-samples. A candidate is a boundary
 * witness when sup-norm probes at radii probe_radius / 2^k all hit stratum a,
 * and an interior witness when n_samples probes at probe_radius miss it.
 * Both together mean the condition fails. If either stratum never shows up
 * the verdict is inconclusive.
 */
FrontierReport frontier_check(const StratumSampler& sampler, const IsoClass& a, const IsoClass& b,
                              LabelMode mode, std::size_t n_samples, double probe_radius,
                              std::uint64_t seed, const CechOptions& opts = {});

/// Uniform sample from the open sup-norm ball of radius `delta` around `x`
/// that keeps the number of points. Returns nullopt if two points collide.
template <class Rng>
std::optional<RanPoint> perturb(const RanPoint& x, double delta, Rng& rng);

}  // namespace ranstrat

#include "ranstrat/detail/perturb.ipp"
