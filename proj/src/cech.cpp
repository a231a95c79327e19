#include "ranstrat/cech.hpp"

#include <algorithm>
#include <set>

#include "ranstrat/errors.hpp"

namespace ranstrat {

std::size_t max_subset_size(std::size_t n_points, const CechOptions& opts) {
  if (!opts.max_dim) {
    if (n_points > kUncappedPointLimit) {
      throw ValidationError("configurations with more than " + std::to_string(kUncappedPointLimit) +
                            " points need an explicit max_dim");
    }
    return n_points;
  }
  return std::min(n_points, *opts.max_dim + 1);
}

std::vector<SubsetRadius> subset_radii(const PointConfig& p, const CechOptions& opts) {
  const std::size_t n = p.size();
  const std::size_t k_max = max_subset_size(n, opts);
  std::vector<SubsetRadius> out;
  Simplex current;
  auto recurse = [&](auto&& self, Vertex next) -> void {
    if (!current.empty()) {
      const auto pts = p.select(current);
      out.push_back({current, current.size() == 1 ? 0.0 : meb(pts).radius});
    }
    if (current.size() == k_max) return;
    for (Vertex v = next; v < n; ++v) {
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(),
            [](const SubsetRadius& a, const SubsetRadius& b) { return SimplexLess{}(a.vertices, b.vertices); });
  return out;
}

SimplicialComplex cech_complex(const RanPoint& x, const CechOptions& opts) {
  const PointConfig& p = x.config;
  const std::size_t n = p.size();
  const std::size_t k_max = max_subset_size(n, opts);
  const double threshold = x.radius + opts.eps_geo;

  std::vector<Simplex> simplices;
  std::vector<Simplex> level;
  for (Vertex v = 0; v < n; ++v) level.push_back(Simplex{v});
  simplices = level;

  for (std::size_t k = 2; k <= k_max && !level.empty(); ++k) {
    const std::set<Simplex> previous(level.begin(), level.end());
    std::vector<Simplex> next;
    // Extend each (k-1)-subset by a larger vertex and keep candidates whose
    // faces are all present and whose enclosing radius fits.
    for (const auto& s : level) {
      for (Vertex v = s.back() + 1; v < n; ++v) {
        Simplex cand = s;
        cand.push_back(v);
        bool faces_ok = true;
        Simplex face;
        for (std::size_t skip = 0; skip + 1 < cand.size() && faces_ok; ++skip) {
          face.clear();
          for (std::size_t i = 0; i < cand.size(); ++i) {
            if (i != skip) face.push_back(cand[i]);
          }
          faces_ok = previous.count(face) > 0;
        }
        if (!faces_ok) continue;
        if (meb(p.select(cand)).radius <= threshold) next.push_back(std::move(cand));
      }
    }
    simplices.insert(simplices.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return SimplicialComplex::from_closed(n, std::move(simplices));
}

Filtration cech_filtration(const PointConfig& p, const CechOptions& opts) {
  std::vector<double> radii;
  for (const auto& s : subset_radii(p, opts)) radii.push_back(s.radius);
  std::sort(radii.begin(), radii.end());

  std::vector<double> critical;
  for (double r : radii) {
    if (critical.empty() || r - critical.back() > opts.eps_geo) critical.push_back(r);
  }

  Filtration f{p, critical, {}};
  for (std::size_t i = 0; i < critical.size(); ++i) {
    const double probe = (i + 1 < critical.size())
                             ? 0.5 * (critical[i] + critical[i + 1])
                             : critical[i] + std::max(1.0, critical[i]);
    f.complexes.push_back(cech_complex(RanPoint(p, probe), opts));
  }
  return f;
}

}  // namespace ranstrat
