#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ranstrat/complexes.hpp"

namespace ranstrat {

/// Default cap on n_max for exhaustive class enumeration.
inline constexpr std::size_t kDefaultEnumerationCap = 5;

/**
 * Searches for a simplicial map c -> c2 that is surjective on vertices, which
 * witnesses [c] >= [c2].
 *
 * Backtracks over source vertices in index order, trying target vertices in
 * ascending order. A partial assignment is pruned as soon as the image of the
 * assigned part of some source simplex is not a target simplex, or when the
 * remaining source vertices cannot cover the still-missing targets. The first
 * witness in this order is returned, so the result is deterministic.
 */
std::optional<SimplicialMap> dominates(const SimplicialComplex& c, const SimplicialComplex& c2,
                                       std::size_t cap = kDefaultCanonicalCap);

/// All isomorphism classes on 1..n_max vertices with the order relation
/// evaluated eagerly. `relation(i, j)` holds iff classes[i] >= classes[j].
class PosetUniverse {
 public:
  PosetUniverse(std::size_t n_max, std::vector<IsoClass> classes, std::vector<char> relation);

  std::size_t n_max() const { return n_max_; }
  const std::vector<IsoClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }

  bool relation(std::size_t i, std::size_t j) const { return relation_[i * classes_.size() + j] != 0; }

  /// Index of a class in `classes()`, if present.
  std::optional<std::size_t> index_of(const IsoClass& c) const;

 private:
  std::size_t n_max_;
  std::vector<IsoClass> classes_;
  std::vector<char> relation_;
};

/// Classes are ordered by vertex count, then simplex count, then key.
PosetUniverse enumerate_classes(std::size_t n_max, std::size_t cap = kDefaultEnumerationCap);

/// { [c'] in u : [c'] >= [c] } in universe order. Throws ValidationError if
/// `c` is not in the universe.
std::vector<IsoClass> upset(const IsoClass& c, const PosetUniverse& u);

struct HasseDiagram {
  std::vector<IsoClass> nodes;
  /// (higher, lower) index pairs; the transitive reduction of the strict order.
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges;
};

HasseDiagram hasse(const PosetUniverse& u);

/// DOT digraph with nodes labeled by canonical facet lists and edges pointing
/// from the larger class to the smaller one.
std::string export_dot(const HasseDiagram& h);

}  // namespace ranstrat
