#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "ranstrat/errors.hpp"
#include "ranstrat/io.hpp"

using namespace ranstrat;

TEST_CASE("complex JSON") {
  const auto edge = make_complex(2, {{0, 1}});
  CHECK(io::to_json(edge).dump() == R"({"n_vertices":2,"simplices":[[0],[1],[0,1]]})");
  CHECK(io::complex_from_json(io::parse(R"({"n_vertices":3,"simplices":[[0,1,2]]})")).size() == 7);
  CHECK_THROWS_AS(io::complex_from_json(io::parse(R"({"n_vertices":2})")), ValidationError);
  CHECK_THROWS_AS(io::complex_from_json(io::parse(R"({"n_vertices":2,"simplices":[[0,3]]})")), ValidationError);
  CHECK_THROWS_AS(io::complex_from_json(io::parse(R"({"n_vertices":"x","simplices":[]})")), ValidationError);
  CHECK_THROWS_AS(io::parse("{not json"), ValidationError);
}

TEST_CASE("property: round trips") {
  gen::Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    const auto c = gen::complex(rng, 5);
    CHECK(io::complex_from_json(io::parse(io::to_json(c).dump())) == c);
    const auto p = gen::points(rng, gen::uniform_size(rng, 1, 5));
    CHECK(io::points_from_json(io::parse(io::to_json(p).dump())) == p);
    const RanPoint x(p, gen::uniform(rng, 0, 1));
    CHECK(io::ran_point_from_json(io::parse(io::to_json(x).dump())) == x);
    const auto f = cech_filtration(p);
    const auto f2 = io::filtration_from_json(io::parse(io::to_json(f).dump()));
    CHECK(f2.config == f.config);
    CHECK(f2.critical_radii == f.critical_radii);
    CHECK(f2.complexes == f.complexes);
  }
}

TEST_CASE("universe, maps, labels and paths round trip") {
  const auto u = enumerate_classes(3);
  const auto j = io::to_json(u);
  CHECK(io::to_json(io::universe_from_json(j)) == j);

  const auto w = dominates(make_complex(3, {{0, 1}}), make_complex(2, {}));
  REQUIRE(w);
  CHECK(io::map_from_json(io::to_json(*w)) == *w);

  const RanPoint x(PointConfig(1, {{0.0}, {1.0}}), 0.5);
  const auto label = stratum_label(x);
  const auto lj = io::to_json(label, tilde_r(x));
  CHECK(lj["case"] == "boundary");
  CHECK(lj["safe_radius"] == 0.25);
  const auto back = io::label_from_json(lj);
  CHECK(back.cls == label.cls);
  CHECK(back.degenerate_subsets == label.degenerate_subsets);

  const PLPath path = cech_path(gen::unit_triangle(), 0.9);
  CHECK(io::path_from_json(io::parse(io::to_json(path).dump())) == path);

  const auto z = zigzag(path, 1e-3);
  const auto zj = io::to_json(z);
  CHECK(io::to_json(io::zigzag_from_json(io::parse(zj.dump()))) == zj);
  CHECK_THROWS_AS(io::path_from_json(io::parse(R"({"dim":1,"breakpoints":[0,1],"tracks":[],"radius":[0,0]})")),
                  ValidationError);
}

TEST_CASE("frontier report JSON") {
  const PointConfig p(1, {{0.0}, {1.0}});
  const auto r = frontier_check(two_point_line_family(), canonical_form(make_complex(2, {})),
                                canonical_form(make_complex(2, {{0, 1}})), LabelMode::coarse, 500, 0.05, 3);
  const auto j = io::to_json(r);
  CHECK(j["verdict"] == "violated");
  CHECK(j["pair"] == io::Json::array({"[0] [1]", "[0,1]"}));
  CHECK(j["witnesses"]["boundary"]["radius"] == 0.5);
  CHECK(j["witnesses"]["interior"]["radius"] == 0.6);
}
