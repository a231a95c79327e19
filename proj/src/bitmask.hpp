#pragma once

// Bitmask helpers shared by the brute-force routines (canonical forms and
// surjective map search). Only valid for complexes on at most 64 vertices.

#include <bit>
#include <cstdint>
#include <vector>

#include "ranstrat/complexes.hpp"

namespace ranstrat::detail {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxMaskVertices = 64;

inline Mask to_mask(const Simplex& s) {
  Mask m = 0;
  for (Vertex v : s) m |= Mask{1} << v;
  return m;
}

inline Simplex from_mask(Mask m) {
  Simplex s;
  while (m != 0) {
    s.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return s;
}

inline std::vector<Mask> simplex_masks(const SimplicialComplex& c) {
  std::vector<Mask> out;
  out.reserve(c.size());
  for (const auto& s : c.simplices()) out.push_back(to_mask(s));
  return out;
}

}  // namespace ranstrat::detail
