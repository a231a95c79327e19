#include <algorithm>
#include <cmath>
#include <random>

#include "ranstrat/strat.hpp"

namespace ranstrat {

namespace {

// Smallest probe scale; below a few eps_geo the critical band itself
// dominates what a probe sees.
constexpr double kMinScaleOverEps = 1e3;
constexpr std::size_t kMaxScales = 40;
constexpr std::size_t kBisectionSteps = 80;
constexpr std::size_t kMaxBisections = 16;
constexpr std::size_t kMaxInteriorCandidates = 8;

enum class Side { a, b, other };

class FrontierSearch {
 public:
  FrontierSearch(const StratumSampler& sampler, const IsoClass& a, const IsoClass& b, LabelMode mode,
                 std::size_t n_samples, double probe_radius, std::uint64_t seed, const CechOptions& opts)
      : sampler_(sampler),
        a_(a),
        b_(b),
        mode_(mode),
        n_samples_(std::max<std::size_t>(n_samples, 1)),
        probe_radius_(probe_radius),
        rng_(seed),
        opts_(opts) {}

  FrontierReport run() {
    FrontierReport report;
    const char* suffix = mode_ == LabelMode::refined ? " (non-critical)" : "";
    report.label_a = a_.name() + suffix;
    report.label_b = b_.name() + suffix;
    if (a_ == b_) {
      report.verdict = FrontierVerdict::satisfied_at_budget;
      return report;
    }

    for (const auto& c : sampler_.candidates) {
      if (done()) break;
      if (classify(c) == Side::b) examine(c);
    }
    if (!done()) random_phase();

    report.boundary_witness = boundary_;
    report.interior_witness = interior_;
    report.evaluations = evaluations_;
    if (boundary_ && interior_) {
      report.verdict = FrontierVerdict::violated;
    } else if (!seen_a_ || !seen_b_) {
      report.verdict = FrontierVerdict::inconclusive;
    } else {
      report.verdict = FrontierVerdict::satisfied_at_budget;
    }
    return report;
  }

 private:
  bool done() const { return boundary_.has_value() && interior_.has_value(); }

  Side classify(const RanPoint& x) {
    ++evaluations_;
    const StratumLabel label = stratum_label(x, opts_);
    if (mode_ == LabelMode::refined && label.degenerate) return Side::other;
    if (label.cls == a_) {
      seen_a_ = true;
      return Side::a;
    }
    if (label.cls == b_) {
      seen_b_ = true;
      return Side::b;
    }
    return Side::other;
  }

  bool probe_hits_a(const RanPoint& center, double delta, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      const auto q = perturb(center, delta, rng_);
      if (q && classify(*q) == Side::a) return true;
    }
    return false;
  }

  void examine(const RanPoint& x) {
    if (!boundary_) {
      const double floor = kMinScaleOverEps * opts_.eps_geo;
      std::size_t scales = 0;
      for (double d = probe_radius_; d >= floor && scales < kMaxScales; d *= 0.5) ++scales;
      const std::size_t per_scale = std::max<std::size_t>(64, n_samples_ / std::max<std::size_t>(scales, 1));
      bool every_scale = scales > 0;
      double delta = probe_radius_;
      for (std::size_t k = 0; k < scales && every_scale; ++k, delta *= 0.5) {
        every_scale = probe_hits_a(x, delta, per_scale);
      }
      if (every_scale) boundary_ = x;
    }
    if (!interior_ && !probe_hits_a(x, probe_radius_, n_samples_)) interior_ = x;
  }

  std::vector<double> draw_parameters() {
    std::vector<double> theta;
    for (const auto& [lo, hi] : sampler_.bounds) {
      theta.push_back(std::uniform_real_distribution<double>(lo, hi)(rng_));
    }
    return theta;
  }

  std::optional<RanPoint> realize(std::span<const double> theta) {
    try {
      return sampler_.realize(theta);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }

  // Walks from an a-sample towards a b-sample, keeping the invariant that the
  // ends carry labels a and b. Gives up if a third label shows up.
  std::optional<RanPoint> bisect(std::vector<double> ta, std::vector<double> tb) {
    std::optional<RanPoint> last_b;
    for (std::size_t step = 0; step < kBisectionSteps; ++step) {
      std::vector<double> mid(ta.size());
      for (std::size_t i = 0; i < ta.size(); ++i) mid[i] = 0.5 * (ta[i] + tb[i]);
      if (mid == ta || mid == tb) break;
      const auto x = realize(mid);
      if (!x) return std::nullopt;
      switch (classify(*x)) {
        case Side::a:
          ta = std::move(mid);
          break;
        case Side::b:
          tb = std::move(mid);
          last_b = x;
          break;
        case Side::other:
          return std::nullopt;
      }
    }
    if (!last_b) last_b = realize(tb);
    return last_b;
  }

  void random_phase() {
    std::vector<std::vector<double>> as, bs;
    std::vector<RanPoint> b_points;
    for (std::size_t i = 0; i < n_samples_; ++i) {
      auto theta = draw_parameters();
      const auto x = realize(theta);
      if (!x) continue;
      const Side side = classify(*x);
      if (side == Side::a) as.push_back(std::move(theta));
      if (side == Side::b) {
        bs.push_back(std::move(theta));
        b_points.push_back(*x);
      }
    }
    for (std::size_t i = 0; i < b_points.size() && i < kMaxInteriorCandidates && !interior_; ++i) {
      if (!probe_hits_a(b_points[i], probe_radius_, n_samples_)) interior_ = b_points[i];
    }
    const std::size_t pairs = std::min({as.size(), bs.size(), kMaxBisections});
    for (std::size_t i = 0; i < pairs && !boundary_; ++i) {
      if (const auto c = bisect(as[i], bs[i])) examine(*c);
    }
  }

  const StratumSampler& sampler_;
  const IsoClass& a_;
  const IsoClass& b_;
  LabelMode mode_;
  std::size_t n_samples_;
  double probe_radius_;
  std::mt19937_64 rng_;
  CechOptions opts_;

  std::optional<RanPoint> boundary_;
  std::optional<RanPoint> interior_;
  bool seen_a_ = false;
  bool seen_b_ = false;
  std::size_t evaluations_ = 0;
};

}  // namespace

const char* to_string(FrontierVerdict v) {
  switch (v) {
    case FrontierVerdict::violated:
      return "violated";
    case FrontierVerdict::satisfied_at_budget:
      return "satisfied-at-budget";
    case FrontierVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

StratumSampler two_point_line_family() {
  auto realize = [](std::span<const double> theta) {
    return RanPoint(PointConfig(1, {{0.0}, {theta[0]}}), theta[1]);
  };
  const PointConfig unit(1, {{0.0}, {1.0}});
  return StratumSampler{{{0.5, 1.5}, {0.0, 1.0}}, realize, {RanPoint(unit, 0.5), RanPoint(unit, 0.6)}};
}

FrontierReport frontier_check(const StratumSampler& sampler, const IsoClass& a, const IsoClass& b,
                              LabelMode mode, std::size_t n_samples, double probe_radius,
                              std::uint64_t seed, const CechOptions& opts) {
  return FrontierSearch(sampler, a, b, mode, n_samples, probe_radius, seed, opts).run();
}

}  // namespace ranstrat
