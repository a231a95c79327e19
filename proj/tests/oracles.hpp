#pragma once

// Independent reference implementations used to check the library. They
// share no code with src/ beyond the basic value types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "ranstrat/complexes.hpp"
#include "ranstrat/geometry.hpp"

namespace oracle {

using ranstrat::Point;
using ranstrat::Simplex;
using ranstrat::SimplicialComplex;
using ranstrat::Vertex;

// Solves A x = b by Gaussian elimination with partial pivoting. Returns false
// for a (numerically) singular system.
inline bool solve(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    if (std::abs(a[piv][c]) < 1e-12) return false;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t c = n; c-- > 0;) {
    double s = b[c];
    for (std::size_t k = c + 1; k < n; ++k) s -= a[c][k] * x[k];
    x[c] = s / a[c][c];
  }
  return true;
}

inline double dist(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Smallest enclosing radius by trying every support set of at most d+1
// points: take the circumcenter in its affine hull, keep it if it encloses
// everything, and return the smallest such radius.
inline double meb_radius(const std::vector<Point>& pts) {
  const std::size_t n = pts.size(), d = pts.front().size();
  double best = INFINITY;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Point> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) s.push_back(pts[i]);
    }
    if (s.size() > d + 1) continue;
    Point c = s[0];
    if (s.size() > 1) {
      const std::size_t k = s.size() - 1;
      std::vector<std::vector<double>> g(k, std::vector<double>(k));
      std::vector<double> rhs(k), lam;
      for (std::size_t i = 0; i < k; ++i) {
        Point vi(d);
        for (std::size_t t = 0; t < d; ++t) vi[t] = s[i + 1][t] - s[0][t];
        for (std::size_t j = 0; j < k; ++j) {
          double dot = 0.0;
          for (std::size_t t = 0; t < d; ++t) dot += vi[t] * (s[j + 1][t] - s[0][t]);
          g[i][j] = 2.0 * dot;
        }
        double nn = 0.0;
        for (double v : vi) nn += v * v;
        rhs[i] = nn;
      }
      if (!solve(g, rhs, lam)) continue;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t t = 0; t < d; ++t) c[t] += lam[i] * (s[i + 1][t] - s[0][t]);
      }
    }
    double r = 0.0;
    for (const auto& p : s) r = std::max(r, dist(c, p));
    bool encloses = true;
    for (const auto& p : pts) encloses = encloses && dist(c, p) <= r * (1 + 1e-10) + 1e-12;
    if (encloses) best = std::min(best, r);
  }
  return best;
}

// Whether the closed r-balls around planar points meet, decided on the grid
// pitch * Z^2: some grid point must lie within r + pitch of every center.
// Each grid row is resolved exactly, so this matches testing every node.
inline bool grid_balls_meet(const std::vector<Point>& pts, double r, double pitch = 1e-3) {
  const double s = r + pitch;
  double ylo = -INFINITY, yhi = INFINITY;
  for (const auto& p : pts) {
    ylo = std::max(ylo, p[1] - s);
    yhi = std::min(yhi, p[1] + s);
  }
  if (ylo > yhi) return false;
  for (long iy = static_cast<long>(std::ceil(ylo / pitch)); iy * pitch <= yhi; ++iy) {
    const double y = static_cast<double>(iy) * pitch;
    double xlo = -INFINITY, xhi = INFINITY;
    for (const auto& p : pts) {
      const double h = s * s - (y - p[1]) * (y - p[1]);
      if (h < 0.0) {
        xlo = INFINITY;
        break;
      }
      const double w = std::sqrt(h);
      xlo = std::max(xlo, p[0] - w);
      xhi = std::min(xhi, p[0] + w);
    }
    if (xlo <= xhi && std::ceil(xlo / pitch) <= std::floor(xhi / pitch)) return true;
  }
  return false;
}

inline std::set<Simplex> simplex_set(const SimplicialComplex& c) {
  return {c.simplices().begin(), c.simplices().end()};
}

inline bool is_simplicial(const SimplicialComplex& a, const SimplicialComplex& b, const std::vector<Vertex>& f) {
  const auto target = simplex_set(b);
  for (const auto& s : a.simplices()) {
    Simplex img;
    for (Vertex v : s) img.push_back(f[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (!target.count(img)) return false;
  }
  return true;
}

// Tries all n_b^n_a vertex maps.
inline bool dominates(const SimplicialComplex& a, const SimplicialComplex& b) {
  const std::size_t n = a.n_vertices(), m = b.n_vertices();
  if (n < m) return false;
  std::vector<Vertex> f(n, 0);
  for (;;) {
    std::vector<bool> hit(m, false);
    for (Vertex v : f) hit[v] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }) && is_simplicial(a, b, f)) return true;
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) return false;
  }
}

// Relabel-invariant encoding: lexicographically least sorted list of sorted
// simplices over all permutations.
inline std::vector<Simplex> invariant(const SimplicialComplex& c) {
  std::vector<Vertex> perm(c.n_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Simplex> best;
  bool first = true;
  do {
    std::vector<Simplex> img;
    for (const auto& s : c.simplices()) {
      Simplex t;
      for (Vertex v : s) t.push_back(perm[v]);
      std::sort(t.begin(), t.end());
      img.push_back(std::move(t));
    }
    std::sort(img.begin(), img.end());
    if (first || img < best) best = std::move(img);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// All downward-closed simplex families on n vertices containing every
// vertex, found by filtering every subset of the non-singleton simplices.
inline std::vector<SimplicialComplex> all_complexes(std::size_t n) {
  std::vector<Simplex> big;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    if (__builtin_popcount(m) < 2) continue;
    Simplex s;
    for (Vertex v = 0; v < n; ++v) {
      if (m >> v & 1u) s.push_back(v);
    }
    big.push_back(std::move(s));
  }
  std::vector<SimplicialComplex> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << big.size()); ++pick) {
    std::set<Simplex> fam;
    for (std::size_t i = 0; i < big.size(); ++i) {
      if (pick >> i & 1u) fam.insert(big[i]);
    }
    bool closed = true;
    for (const auto& s : fam) {
      if (s.size() < 3) continue;
      for (std::size_t drop = 0; drop < s.size() && closed; ++drop) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<long>(drop));
        closed = fam.count(f) > 0;
      }
      if (!closed) break;
    }
    if (closed) out.push_back(ranstrat::make_complex(n, std::vector<Simplex>(fam.begin(), fam.end())));
  }
  return out;
}

// Representatives of the isomorphism classes on 1..n_max vertices.
inline std::vector<SimplicialComplex> class_representatives(std::size_t n_max) {
  std::vector<SimplicialComplex> reps;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::map<std::vector<Simplex>, SimplicialComplex> seen;
    for (auto& c : all_complexes(n)) seen.emplace(invariant(c), c);
    for (auto& [k, c] : seen) reps.push_back(c);
  }
  return reps;
}

// Transitive reduction of a strict order given as an adjacency matrix.
inline std::set<std::pair<std::size_t, std::size_t>> covers(const std::vector<std::vector<bool>>& strict) {
  const std::size_t n = strict.size();
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!strict[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k) direct = !(strict[i][k] && strict[k][j]);
      if (direct) out.insert({i, j});
    }
  }
  return out;
}

}  // namespace oracle
