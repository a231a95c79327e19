#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "oracles.hpp"
#include "ranstrat/errors.hpp"
#include "ranstrat/scposet.hpp"

using namespace ranstrat;

namespace {

std::size_t index_named(const PosetUniverse& u, const SimplicialComplex& c) {
  return *u.index_of(canonical_form(c));
}

}  // namespace

TEST_CASE("dominates: small witnesses") {
  const auto c = make_complex(6, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {0, 1}});
  const auto d = make_complex(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  const auto w = dominates(c, d);
  REQUIRE(w);
  CHECK(is_simplicial(*w));
  CHECK(is_vertex_surjective(*w));

  const auto self = dominates(d, d);
  REQUIRE(self);
  CHECK(is_simplicial(*self));

  const auto path = make_complex(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(dominates(path, make_complex(2, {})));
  CHECK_FALSE(dominates(make_complex(2, {}), make_complex(3, {})));
  CHECK_THROWS_AS(dominates(make_complex(9, {}), make_complex(1, {})), CapExceeded);
}

TEST_CASE("property: dominates agrees with exhaustive map search") {
  gen::Rng rng(21);
  for (int trial = 0; trial < 600; ++trial) {
    const auto a = gen::complex(rng, 5);
    const auto b = gen::complex(rng, 4);
    const auto w = dominates(a, b);
    REQUIRE(w.has_value() == oracle::dominates(a, b));
    if (w) {
      CHECK(oracle::is_simplicial(a, b, w->vertex_map()));
      CHECK(is_vertex_surjective(*w));
    }
  }
}

TEST_CASE("class counts match exhaustive enumeration") {
  CHECK(enumerate_classes(1).size() == 1);
  CHECK(enumerate_classes(2).size() == 3);
  CHECK(enumerate_classes(3).size() == 8);
  CHECK(enumerate_classes(4).size() == oracle::class_representatives(4).size());
  CHECK(enumerate_classes(4).size() == 28);
  CHECK_THROWS_AS(enumerate_classes(6), CapExceeded);
}

TEST_CASE("Hasse diagram on three vertices") {
  const auto u = enumerate_classes(3);
  const auto h = hasse(u);
  REQUIRE(h.cover_edges.size() == 8);

  const auto pt = make_complex(1, {});
  const auto two = make_complex(2, {});
  const auto edge = make_complex(2, {{0, 1}});
  const auto discrete3 = make_complex(3, {});
  const auto edge_pt = make_complex(3, {{0, 1}});
  const auto path = make_complex(3, {{0, 1}, {1, 2}});
  const auto cycle = make_complex(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto filled = make_complex(3, {{0, 1, 2}});
  std::vector<std::pair<std::size_t, std::size_t>> expected;
  for (const auto& [hi, lo] : std::vector<std::pair<SimplicialComplex, SimplicialComplex>>{
           {discrete3, edge_pt}, {edge_pt, path}, {path, cycle}, {cycle, filled},
           {two, edge}, {edge_pt, two}, {edge, pt}, {filled, edge}}) {
    expected.emplace_back(index_named(u, hi), index_named(u, lo));
  }
  auto got = h.cover_edges;
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);

  // The same edges come out of an independent transitive reduction.
  std::vector<std::vector<bool>> strict(u.size(), std::vector<bool>(u.size()));
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      strict[i][j] = i != j && oracle::dominates(u.classes()[i].canonical(), u.classes()[j].canonical());
    }
  }
  const auto ref = oracle::covers(strict);
  CHECK(std::set<std::pair<std::size_t, std::size_t>>(got.begin(), got.end()) == ref);
}

TEST_CASE("upsets") {
  const auto u = enumerate_classes(3);
  CHECK(upset(canonical_form(make_complex(1, {})), u).size() == 8);
  const auto up = upset(canonical_form(make_complex(3, {{0, 1, 2}})), u);
  CHECK(up.size() == 5);
  for (const auto& c : up) CHECK(c.vertex_count() == 3);
  CHECK_THROWS_AS(upset(canonical_form(make_complex(4, {})), u), ValidationError);
}

TEST_CASE("property: relation matrix is a partial order") {
  const auto u = enumerate_classes(4);
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(u.relation(i, i));
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && u.relation(i, j)) CHECK_FALSE(u.relation(j, i));
      for (std::size_t k = 0; k < n; ++k) {
        if (u.relation(i, j) && u.relation(j, k)) CHECK(u.relation(i, k));
      }
    }
  }
}

TEST_CASE("DOT export") {
  CHECK(export_dot(HasseDiagram{}) == "digraph hasse {\n}\n");
  const std::string dot = export_dot(hasse(enumerate_classes(2)));
  CHECK(std::count(dot.begin(), dot.end(), '>') == 2);
  CHECK(dot.find("label=\"[0,1]\"") != std::string::npos);
  const std::string dot3 = export_dot(hasse(enumerate_classes(3)));
  CHECK(std::count(dot3.begin(), dot3.end(), '>') == 8);
  CHECK(dot3 == export_dot(hasse(enumerate_classes(3))));
}
