#include "ranstrat/scposet.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "bitmask.hpp"
#include "ranstrat/errors.hpp"

namespace ranstrat {

namespace {

using detail::Mask;

class SurjectionSearch {
 public:
  SurjectionSearch(const SimplicialComplex& source, const SimplicialComplex& target)
      : n_(source.n_vertices()),
        m_(target.n_vertices()),
        assignment_(n_, 0),
        cover_count_(m_, 0),
        target_has_(std::size_t{1} << m_, 0) {
    for (Mask t : detail::simplex_masks(target)) target_has_[t] = 1;
    // For vertex v, the distinct restrictions of simplices containing v to
    // {0, ..., v}: once v is assigned these images are fully determined.
    checks_.resize(n_);
    for (Mask s : detail::simplex_masks(source)) {
      if (std::popcount(s) < 2) continue;
      for (Mask rest = s; rest != 0; rest &= rest - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(rest));
        const Mask prefix = s & ((v + 1 == 64) ? ~Mask{0} : ((Mask{1} << (v + 1)) - 1));
        if (std::popcount(prefix) >= 2) checks_[v].push_back(prefix);
      }
    }
    for (auto& c : checks_) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
    }
  }

  std::optional<std::vector<Vertex>> run() {
    if (search(0)) return assignment_;
    return std::nullopt;
  }

 private:
  bool search(std::size_t v) {
    if (v == n_) return uncovered_ == 0;
    if (n_ - v < uncovered_) return false;
    for (Vertex w = 0; w < m_; ++w) {
      assignment_[v] = w;
      if (!consistent(v)) continue;
      if (cover_count_[w]++ == 0) --uncovered_;
      if (search(v + 1)) return true;
      if (--cover_count_[w] == 0) ++uncovered_;
    }
    return false;
  }

  bool consistent(std::size_t v) const {
    for (Mask prefix : checks_[v]) {
      Mask image = 0;
      for (Mask rest = prefix; rest != 0; rest &= rest - 1) {
        image |= Mask{1} << assignment_[std::countr_zero(rest)];
      }
      if (!target_has_[image]) return false;
    }
    return true;
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<Vertex> assignment_;
  std::vector<std::size_t> cover_count_;
  std::size_t uncovered_ = m_;
  std::vector<char> target_has_;
  std::vector<std::vector<Mask>> checks_;
};

// Downward-closed families on exactly n vertices, as simplex-mask lists.
void enumerate_families(std::size_t n, std::vector<std::vector<Mask>>& out) {
  std::vector<Mask> candidates;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (std::popcount(s) >= 2) candidates.push_back(s);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });

  std::vector<char> present(std::size_t{1} << n, 0);
  for (std::size_t v = 0; v < n; ++v) present[Mask{1} << v] = 1;

  std::vector<Mask> chosen;
  auto recurse = [&](auto&& self, std::size_t idx) -> void {
    if (idx == candidates.size()) {
      std::vector<Mask> family;
      for (std::size_t v = 0; v < n; ++v) family.push_back(Mask{1} << v);
      family.insert(family.end(), chosen.begin(), chosen.end());
      out.push_back(std::move(family));
      return;
    }
    const Mask s = candidates[idx];
    self(self, idx + 1);
    bool faces_present = true;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      if (!present[s & ~(rest & -rest)]) {
        faces_present = false;
        break;
      }
    }
    if (faces_present) {
      present[s] = 1;
      chosen.push_back(s);
      self(self, idx + 1);
      chosen.pop_back();
      present[s] = 0;
    }
  };
  recurse(recurse, 0);
}

}  // namespace

std::optional<SimplicialMap> dominates(const SimplicialComplex& c, const SimplicialComplex& c2,
                                       std::size_t cap) {
  if (c.n_vertices() > cap || c2.n_vertices() > cap) {
    throw CapExceeded("surjective map search is capped at " + std::to_string(cap) + " vertices");
  }
  if (c.n_vertices() > detail::kMaxMaskVertices || c2.n_vertices() > 24) {
    throw CapExceeded("surjective map search supports at most 24 target vertices");
  }
  if (c.n_vertices() < c2.n_vertices()) return std::nullopt;
  auto vm = SurjectionSearch(c, c2).run();
  if (!vm) return std::nullopt;
  return SimplicialMap(c, c2, std::move(*vm));
}

PosetUniverse::PosetUniverse(std::size_t n_max, std::vector<IsoClass> classes,
                             std::vector<char> relation)
    : n_max_(n_max), classes_(std::move(classes)), relation_(std::move(relation)) {
  if (relation_.size() != classes_.size() * classes_.size()) {
    throw ValidationError("relation matrix must be square over the class list");
  }
}

std::optional<std::size_t> PosetUniverse::index_of(const IsoClass& c) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i] == c) return i;
  }
  return std::nullopt;
}

PosetUniverse enumerate_classes(std::size_t n_max, std::size_t cap) {
  if (n_max == 0) throw ValidationError("n_max must be at least 1");
  if (n_max > cap) {
    throw CapExceeded("class enumeration is capped at " + std::to_string(cap) + " vertices");
  }

  std::vector<IsoClass> classes;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<std::vector<Mask>> families;
    enumerate_families(n, families);
    std::map<std::string, IsoClass> by_key;
    for (const auto& family : families) {
      std::vector<Simplex> simplices;
      for (Mask m : family) simplices.push_back(detail::from_mask(m));
      auto cls = canonical_form(SimplicialComplex::from_closed(n, std::move(simplices)), cap);
      by_key.try_emplace(cls.key(), std::move(cls));
    }
    std::vector<IsoClass> level;
    for (auto& [key, cls] : by_key) level.push_back(std::move(cls));
    std::stable_sort(level.begin(), level.end(), [](const IsoClass& a, const IsoClass& b) {
      return a.canonical().size() < b.canonical().size();
    });
    for (auto& cls : level) classes.push_back(std::move(cls));
  }

  const std::size_t k = classes.size();
  std::vector<char> relation(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      relation[i * k + j] =
          (i == j) || dominates(classes[i].canonical(), classes[j].canonical(), cap).has_value();
    }
  }
  return PosetUniverse(n_max, std::move(classes), std::move(relation));
}

std::vector<IsoClass> upset(const IsoClass& c, const PosetUniverse& u) {
  const auto idx = u.index_of(c);
  if (!idx) throw ValidationError("class " + c.name() + " is not in the universe");
  std::vector<IsoClass> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u.relation(i, *idx)) out.push_back(u.classes()[i]);
  }
  return out;
}

HasseDiagram hasse(const PosetUniverse& u) {
  HasseDiagram h;
  h.nodes = u.classes();
  const std::size_t k = u.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !u.relation(i, j)) continue;
      bool covered = true;
      for (std::size_t m = 0; m < k && covered; ++m) {
        if (m != i && m != j && u.relation(i, m) && u.relation(m, j)) covered = false;
      }
      if (covered) h.cover_edges.emplace_back(i, j);
    }
  }
  return h;
}

std::string export_dot(const HasseDiagram& h) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << h.nodes[i].name() << "\"];\n";
  }
  for (const auto& [hi, lo] : h.cover_edges) os << "  n" << hi << " -> n" << lo << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ranstrat
