#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "ranstrat/complexes.hpp"
#include "ranstrat/geometry.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// Random complex on n vertices from a handful of random generators.
inline ranstrat::SimplicialComplex complex_on(Rng& rng, std::size_t n) {
  std::vector<ranstrat::Simplex> gens;
  const std::size_t count = uniform_size(rng, 0, n + 1);
  for (std::size_t g = 0; g < count; ++g) {
    ranstrat::Simplex s;
    for (ranstrat::Vertex v = 0; v < n; ++v) {
      if (rng() % 3 == 0) s.push_back(v);
    }
    if (!s.empty()) gens.push_back(std::move(s));
  }
  return ranstrat::make_complex(n, gens);
}

inline ranstrat::SimplicialComplex complex(Rng& rng, std::size_t max_vertices) {
  return complex_on(rng, uniform_size(rng, 1, max_vertices));
}

inline std::vector<ranstrat::Vertex> permutation(Rng& rng, std::size_t n) {
  std::vector<ranstrat::Vertex> p(n);
  for (ranstrat::Vertex i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// n points in [0,1]^dim with pairwise distance at least min_sep.
inline ranstrat::PointConfig points(Rng& rng, std::size_t n, std::size_t dim = 2, double min_sep = 1e-3) {
  for (;;) {
    std::vector<ranstrat::Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
      ranstrat::Point p(dim);
      for (auto& c : p) c = uniform(rng, 0.0, 1.0);
      pts.push_back(std::move(p));
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = ranstrat::distance(pts[i], pts[j]) >= min_sep;
    }
    if (ok) return ranstrat::PointConfig(dim, std::move(pts));
  }
}

inline ranstrat::PointConfig unit_triangle() {
  return ranstrat::PointConfig(2, {{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}});
}

}  // namespace gen
