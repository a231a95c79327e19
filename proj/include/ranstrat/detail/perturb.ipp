#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "ranstrat/errors.hpp"

namespace ranstrat {

template <class Rng>
std::optional<RanPoint> perturb(const RanPoint& x, double delta, Rng& rng) {
  // Shrink slightly so that the sample stays strictly inside the open ball.
  const double reach = delta * (1.0 - 1e-9);
  const std::size_t dim = x.config.dim();
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Point> moved;
  moved.reserve(x.config.size());
  for (const auto& p : x.config.points()) {
    Point dir(dim);
    double norm = 0.0;
    do {
      norm = 0.0;
      for (auto& c : dir) {
        c = gauss(rng);
        norm += c * c;
      }
      norm = std::sqrt(norm);
    } while (norm == 0.0);
    const double len = reach * std::pow(unit(rng), 1.0 / static_cast<double>(dim));
    Point q = p;
    for (std::size_t i = 0; i < dim; ++i) q[i] += dir[i] / norm * len;
    moved.push_back(std::move(q));
  }
  const double s = std::max(0.0, x.radius + reach * (2.0 * unit(rng) - 1.0));
  try {
    return RanPoint(PointConfig(dim, std::move(moved)), s);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

}  // namespace ranstrat
