#include "ranstrat/complexes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "bitmask.hpp"
#include "ranstrat/errors.hpp"

namespace ranstrat {

namespace {

Simplex normalized(const Simplex& s, std::size_t n) {
  if (s.empty()) throw ValidationError("simplices must be nonempty");
  Simplex out = s;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.back() >= n) {
    throw ValidationError("vertex index " + std::to_string(out.back()) +
                          " out of range for complex on " + std::to_string(n) + " vertices");
  }
  return out;
}

void add_all_faces(const Simplex& s, std::set<Simplex, SimplexLess>& out) {
  if (s.size() >= 32) throw CapExceeded("generator of dimension >= 31 cannot be closed explicitly");
  const std::uint32_t count = std::uint32_t{1} << s.size();
  for (std::uint32_t bits = 1; bits < count; ++bits) {
    Simplex face;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (bits & (std::uint32_t{1} << i)) face.push_back(s[i]);
    }
    out.insert(std::move(face));
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_generators(std::size_t n_vertices,
                                                     std::span<const Simplex> generators) {
  if (n_vertices == 0) throw ValidationError("a complex needs at least one vertex");
  std::set<Simplex, SimplexLess> closed;
  for (Vertex v = 0; v < n_vertices; ++v) closed.insert(Simplex{v});
  for (const auto& g : generators) add_all_faces(normalized(g, n_vertices), closed);
  return SimplicialComplex(n_vertices, std::vector<Simplex>(closed.begin(), closed.end()));
}

SimplicialComplex SimplicialComplex::from_closed(std::size_t n_vertices,
                                                 std::vector<Simplex> simplices) {
  if (n_vertices == 0) throw ValidationError("a complex needs at least one vertex");
  for (auto& s : simplices) s = normalized(s, n_vertices);
  std::sort(simplices.begin(), simplices.end(), SimplexLess{});
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());

  SimplicialComplex c(n_vertices, std::move(simplices));
  for (Vertex v = 0; v < n_vertices; ++v) {
    if (!c.contains(Simplex{v})) {
      throw ValidationError("vertex " + std::to_string(v) + " is missing its singleton simplex");
    }
  }
  // Checking codimension-one faces suffices: closure then follows by induction.
  Simplex face;
  for (const auto& s : c.simplices_) {
    if (s.size() < 2) continue;
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      face.clear();
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != skip) face.push_back(s[i]);
      }
      if (!c.contains(face)) throw ValidationError("simplex list is not closed under taking faces");
    }
  }
  return c;
}

int SimplicialComplex::dimension() const {
  if (simplices_.empty()) return -1;
  return static_cast<int>(simplices_.back().size()) - 1;
}

bool SimplicialComplex::contains(std::span<const Vertex> sorted_simplex) const {
  const Simplex probe(sorted_simplex.begin(), sorted_simplex.end());
  return std::binary_search(simplices_.begin(), simplices_.end(), probe, SimplexLess{});
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    const bool is_facet = std::none_of(simplices_.begin(), simplices_.end(), [&](const Simplex& t) {
      return t.size() == s.size() + 1 && std::includes(t.begin(), t.end(), s.begin(), s.end());
    });
    if (is_facet) out.push_back(s);
  }
  return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  if (n_vertices_ != other.n_vertices_) return false;
  return std::all_of(simplices_.begin(), simplices_.end(),
                     [&](const Simplex& s) { return other.contains(s); });
}

SimplicialComplex SimplicialComplex::relabeled(std::span<const Vertex> relabel) const {
  if (relabel.size() != n_vertices_) throw ValidationError("relabeling has wrong length");
  std::vector<bool> used(n_vertices_, false);
  for (Vertex v : relabel) {
    if (v >= n_vertices_ || used[v]) throw ValidationError("relabeling is not a permutation");
    used[v] = true;
  }
  std::vector<Simplex> out;
  out.reserve(simplices_.size());
  for (const auto& s : simplices_) {
    Simplex t;
    t.reserve(s.size());
    for (Vertex v : s) t.push_back(relabel[v]);
    out.push_back(std::move(t));
  }
  return from_closed(n_vertices_, std::move(out));
}

SimplicialComplex make_complex(std::size_t n_vertices, std::span<const Simplex> generators) {
  return SimplicialComplex::from_generators(n_vertices, generators);
}

SimplicialComplex make_complex(std::size_t n_vertices, std::initializer_list<Simplex> generators) {
  return SimplicialComplex::from_generators(
      n_vertices, std::span<const Simplex>(generators.begin(), generators.size()));
}

std::string facet_string(const SimplicialComplex& c) {
  std::ostringstream os;
  bool first = true;
  for (const auto& f : c.facets()) {
    if (!first) os << ' ';
    first = false;
    os << '[';
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << ']';
  }
  return os.str();
}

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                             std::vector<Vertex> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map)) {
  if (vertex_map_.size() != source_.n_vertices()) {
    throw ValidationError("vertex map must be defined on every source vertex");
  }
  for (Vertex w : vertex_map_) {
    if (w >= target_.n_vertices()) throw ValidationError("vertex map leaves the target vertex set");
  }
}

Simplex SimplicialMap::image(std::span<const Vertex> simplex) const {
  Simplex out;
  out.reserve(simplex.size());
  for (Vertex v : simplex) out.push_back(vertex_map_.at(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialMap identity_map(const SimplicialComplex& c) {
  std::vector<Vertex> vm(c.n_vertices());
  std::iota(vm.begin(), vm.end(), Vertex{0});
  return SimplicialMap(c, c, std::move(vm));
}

bool is_simplicial(const SimplicialMap& f) {
  return std::all_of(f.source().simplices().begin(), f.source().simplices().end(),
                     [&](const Simplex& s) { return f.target().contains(f.image(s)); });
}

bool is_vertex_surjective(const SimplicialMap& f) {
  std::vector<bool> hit(f.target().n_vertices(), false);
  for (Vertex w : f.vertex_map()) hit[w] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
  if (!(f.target() == g.source())) {
    throw ValidationError("cannot compose: target of the first map differs from source of the second");
  }
  std::vector<Vertex> vm(f.source().n_vertices());
  for (Vertex v = 0; v < vm.size(); ++v) vm[v] = g(f(v));
  return SimplicialMap(f.source(), g.target(), std::move(vm));
}

IsoClass canonical_form(const SimplicialComplex& c, std::size_t cap) {
  const std::size_t n = c.n_vertices();
  if (n > cap) {
    throw CapExceeded("canonical form needs " + std::to_string(n) + "! permutations; vertex cap is " +
                      std::to_string(cap));
  }
  if (n > detail::kMaxMaskVertices) throw CapExceeded("canonical form supports at most 64 vertices");

  const auto masks = detail::simplex_masks(c);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});

  std::vector<detail::Mask> best;
  std::vector<Vertex> best_perm = perm;
  std::vector<detail::Mask> current(masks.size());
  do {
    for (std::size_t i = 0; i < masks.size(); ++i) {
      detail::Mask m = masks[i], image = 0;
      while (m != 0) {
        image |= detail::Mask{1} << perm[std::countr_zero(m)];
        m &= m - 1;
      }
      current[i] = image;
    }
    std::sort(current.begin(), current.end());
    if (best.empty() || current < best) {
      best = current;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::ostringstream key;
  key << n << ':';
  for (std::size_t i = 0; i < best.size(); ++i) key << (i ? "," : "") << best[i];

  return IsoClass(c.relabeled(best_perm), key.str());
}

bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b, std::size_t cap) {
  if (a.n_vertices() != b.n_vertices() || a.size() != b.size()) return false;
  return canonical_form(a, cap).key() == canonical_form(b, cap).key();
}

}  // namespace ranstrat
