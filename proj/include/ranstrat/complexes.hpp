#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ranstrat {

using Vertex = std::uint32_t;

/// A simplex is a nonempty, strictly increasing list of vertex indices.
using Simplex = std::vector<Vertex>;

/// Graded lexicographic order: shorter simplices first, then lexicographic.
/// This is the storage and output order of every complex.
struct SimplexLess {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Default vertex cap for brute-force canonicalization and map search.
inline constexpr std::size_t kDefaultCanonicalCap = 8;

/**
 * Finite abstract simplicial complex on the dense vertex set {0, ..., n-1}.
 *
 * The full simplex set is stored (not only facets), sorted by SimplexLess.
 * Every vertex is present as a singleton and the set is closed under taking
 * nonempty subsets. Instances are immutable once built.
 */
class SimplicialComplex {
 public:
  /// The empty complex on zero vertices. Only useful as a placeholder.
  SimplicialComplex() = default;

  /// Downward closure of `generators` together with all singletons.
  static SimplicialComplex from_generators(std::size_t n_vertices,
                                           std::span<const Simplex> generators);

  /// Wraps a simplex list that is already downward closed. The closure is
  /// re-validated; a missing face raises ValidationError.
  static SimplicialComplex from_closed(std::size_t n_vertices, std::vector<Simplex> simplices);

  std::size_t n_vertices() const { return n_vertices_; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::size_t size() const { return simplices_.size(); }

  /// -1 for the empty complex.
  int dimension() const;

  bool contains(std::span<const Vertex> sorted_simplex) const;

  /// Maximal simplices in SimplexLess order.
  std::vector<Simplex> facets() const;

  /// Same vertex count and every simplex of *this is a simplex of `other`.
  bool is_subcomplex_of(const SimplicialComplex& other) const;

  /// Image under a vertex relabeling; `relabel` must be a permutation of
  /// {0, ..., n-1}.
  SimplicialComplex relabeled(std::span<const Vertex> relabel) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  SimplicialComplex(std::size_t n, std::vector<Simplex> simplices)
      : n_vertices_(n), simplices_(std::move(simplices)) {}

  std::size_t n_vertices_ = 0;
  std::vector<Simplex> simplices_;
};

/// Builds the closure of `generators` plus all singletons on `n_vertices`
/// vertices. Rejects n_vertices == 0, empty generators and out-of-range
/// indices. Generators are treated as sets (order and repeats ignored).
SimplicialComplex make_complex(std::size_t n_vertices, std::span<const Simplex> generators);
SimplicialComplex make_complex(std::size_t n_vertices, std::initializer_list<Simplex> generators);

/// Human-readable facet list, e.g. "[0,1] [2]".
std::string facet_string(const SimplicialComplex& c);

/// Vertex function between two complexes. Construction only checks that the
/// function is total and lands in range; simpliciality is a separate predicate.
class SimplicialMap {
 public:
  SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<Vertex> vertex_map);

  const SimplicialComplex& source() const { return source_; }
  const SimplicialComplex& target() const { return target_; }
  const std::vector<Vertex>& vertex_map() const { return vertex_map_; }

  Vertex operator()(Vertex v) const { return vertex_map_[v]; }

  /// Sorted, deduplicated image of a vertex set.
  Simplex image(std::span<const Vertex> simplex) const;

  bool operator==(const SimplicialMap&) const = default;

 private:
  SimplicialComplex source_;
  SimplicialComplex target_;
  std::vector<Vertex> vertex_map_;
};

SimplicialMap identity_map(const SimplicialComplex& c);

/// True iff every source simplex is carried onto a target simplex.
bool is_simplicial(const SimplicialMap& f);

bool is_vertex_surjective(const SimplicialMap& f);

/// g after f. Requires f.target() == g.source().
SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g);

/**
 * Isomorphism class of a complex, represented by its canonical relabeling.
 *
 * The canonical form is the relabeling whose simplex set, encoded as a sorted
 * list of vertex bitmasks, is lexicographically least over all n! vertex
 * permutations. `key` is a printable encoding of that list prefixed by the
 * vertex count, so two complexes share a key exactly when they are isomorphic.
 */
class IsoClass {
 public:
  IsoClass(SimplicialComplex canonical, std::string key)
      : canonical_(std::move(canonical)), key_(std::move(key)) {}

  const SimplicialComplex& canonical() const { return canonical_; }
  const std::string& key() const { return key_; }
  std::size_t vertex_count() const { return canonical_.n_vertices(); }

  /// Facet list of the canonical representative.
  std::string name() const { return facet_string(canonical_); }

  bool operator==(const IsoClass& other) const { return key_ == other.key_; }
  std::strong_ordering operator<=>(const IsoClass& other) const { return key_ <=> other.key_; }

 private:
  SimplicialComplex canonical_;
  std::string key_;
};

/// Exhaustive canonicalization; throws CapExceeded when n_vertices > cap.
IsoClass canonical_form(const SimplicialComplex& c, std::size_t cap = kDefaultCanonicalCap);

bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                    std::size_t cap = kDefaultCanonicalCap);

}  // namespace ranstrat
