#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "oracles.hpp"
#include "ranstrat/cech.hpp"
#include "ranstrat/errors.hpp"

using namespace ranstrat;
using doctest::Approx;

namespace {

const PointConfig kTwo(1, {{0.0}, {1.0}});

}  // namespace

TEST_CASE("Cech complexes of small configurations") {
  CHECK(cech_complex(RanPoint(kTwo, 0.4)) == make_complex(2, {}));
  CHECK(cech_complex(RanPoint(kTwo, 0.5)) == make_complex(2, {{0, 1}}));
  const auto tri = gen::unit_triangle();
  CHECK(cech_complex(RanPoint(tri, 0.55)) == make_complex(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(cech_complex(RanPoint(tri, 0.58)) == make_complex(3, {{0, 1, 2}}));
  CHECK(cech_complex(RanPoint(tri, 0.58), CechOptions{1}) == make_complex(3, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST_CASE("subset enumeration cap") {
  std::vector<Point> pts;
  for (int i = 0; i < 9; ++i) pts.push_back({static_cast<double>(i)});
  const RanPoint big(PointConfig(1, pts), 0.1);
  CHECK_THROWS_AS(cech_complex(big), ValidationError);
  CHECK(cech_complex(big, CechOptions{1}).size() == 9);
}

TEST_CASE("filtrations") {
  const auto single = cech_filtration(PointConfig(2, {{0.0, 0.0}}));
  CHECK(single.critical_radii == std::vector<double>{0.0});
  CHECK(single.complexes.size() == 1);

  const auto two = cech_filtration(kTwo);
  REQUIRE(two.critical_radii.size() == 2);
  CHECK(two.critical_radii[1] == Approx(0.5));
  CHECK(two.complexes[0] == make_complex(2, {}));
  CHECK(two.complexes[1] == make_complex(2, {{0, 1}}));

  const auto tri = cech_filtration(gen::unit_triangle());
  REQUIRE(tri.critical_radii.size() == 3);
  CHECK(tri.critical_radii[1] == Approx(0.5));
  CHECK(tri.critical_radii[2] == Approx(1.0 / std::sqrt(3.0)));
  CHECK(tri.complexes[1] == make_complex(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(tri.complexes[2] == make_complex(3, {{0, 1, 2}}));
}

TEST_CASE("property: monotone in the radius") {
  gen::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto p = gen::points(rng, gen::uniform_size(rng, 1, 5));
    double r = gen::uniform(rng, 0, 0.8), s = gen::uniform(rng, 0, 0.8);
    if (r > s) std::swap(r, s);
    const auto a = cech_complex(RanPoint(p, r)), b = cech_complex(RanPoint(p, s));
    CHECK(a.is_subcomplex_of(b));
    const SimplicialMap id(a, b, identity_map(a).vertex_map());
    CHECK(is_simplicial(id));
    CHECK(is_vertex_surjective(id));
  }
}

TEST_CASE("property: filtration intervals reproduce direct evaluation") {
  gen::Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    const auto p = gen::points(rng, gen::uniform_size(rng, 1, 5));
    const auto f = cech_filtration(p);
    for (std::size_t k = 0; k < f.critical_radii.size(); ++k) {
      CHECK(cech_complex(RanPoint(p, f.critical_radii[k])) == f.complexes[k]);
      if (k + 1 < f.critical_radii.size()) {
        CHECK(f.critical_radii[k] < f.critical_radii[k + 1]);
        CHECK_FALSE(f.complexes[k] == f.complexes[k + 1]);
      }
    }
  }
}

TEST_CASE("property: simplices agree with the grid oracle away from critical radii") {
  gen::Rng rng(43);
  for (int i = 0; i < 20; ++i) {
    const auto p = gen::points(rng, gen::uniform_size(rng, 2, 4));
    const double r = gen::uniform(rng, 0.05, 0.6);
    const auto c = cech_complex(RanPoint(p, r));
    for (const auto& s : subset_radii(p)) {
      if (std::abs(r - s.radius) <= 2e-3) continue;
      std::vector<Point> sub = p.select(s.vertices);
      CHECK(c.contains(s.vertices) == oracle::grid_balls_meet(sub, r));
    }
  }
}
