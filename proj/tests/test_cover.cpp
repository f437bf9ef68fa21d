#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "octacube/cover.hpp"
#include "octacube/tet.hpp"

using namespace octacube;

TEST_CASE("Klein 2_6 double cover") {
  auto d = corpus::load("klein_2_6");
  auto cm = orientable_double_cover(d);
  CHECK(cm.cover.c() == 4);
  CHECK(cm.cover.chi == 0);
  CHECK(cm.cover.orientable);
  CHECK(cm.cover.num_regions() == 2 * d.num_regions());
  auto v = validate_cover(cm);
  CHECK(v.ok);
  for (int x = 0; x < cm.cover.c(); ++x) {
    CHECK(cm.deck_crossing[x] != x);
    CHECK(cm.deck_crossing[cm.deck_crossing[x]] == x);
  }
  CHECK(cm.cover.crossings[0].id == d.crossings[0].id + "_s0");
}

TEST_CASE("RP2 curl lifts to the sphere") {
  auto cm = orientable_double_cover(corpus::load("rp2_curl"));
  CHECK(cm.cover.c() == 2);
  CHECK(cm.cover.chi == 2);
  CHECK(validate_cover(cm).ok);
}

TEST_CASE("orientable input rejected") {
  CHECK_THROWS_AS(orientable_double_cover(corpus::load("figure_eight")), ValidationError);
}

TEST_CASE("lifted decomposition projects 2-to-1") {
  auto cm = orientable_double_cover(corpus::load("klein_2_6"));
  auto ld = lift_decomposition(cm);
  CHECK(ld.cover.c() == 4);
  CHECK(ld.base.c() == 2);
  CHECK(ld.projection.ok);
  CHECK(validate_decomposition(ld.cover).ok);
  CHECK(validate_triangulation(triangulate(ld.cover)).ok);
  std::vector<int> hits(ld.base.c(), 0);
  for (int x = 0; x < ld.cover.c(); ++x) {
    hits[ld.oct_proj[x]]++;
    CHECK(ld.deck_oct[x] != x);
  }
  for (int h : hits) CHECK(h == 2);
}

TEST_CASE("broken projection is reported") {
  auto cm = orientable_double_cover(corpus::load("klein_2_6"));
  cm.region_proj[0] = (cm.region_proj[0] + 1) % cm.base.num_regions();
  CHECK_FALSE(validate_cover(cm).ok);
}

TEST_CASE("cube projection and link transfer") {
  for (std::string n : {"klein_2_6", "rp2_curl"}) {
    INFO(n);
    auto cm = orientable_double_cover(corpus::load(n));
    auto ld = lift_decomposition(cm);
    auto bc = cube_complex_from_octahedra(ld.base);
    auto cc = cube_complex_from_octahedra(ld.cover);
    auto p = project_cubes(cc, bc, ld);
    CHECK(p.well_defined);
    std::vector<int> hits(bc.num_cubes, 0);
    for (int q : p.cube) hits[q]++;
    for (int h : hits) CHECK(h == 2);
    auto t = npc_transfer(check_npc(cc), p, check_npc(bc));
    if (t.cover_flag && t.injective) CHECK(t.base_flag);
  }
}

TEST_CASE("representativity does not drop on the cover") {
  for (std::string n : {"klein_2_6", "rp2_curl"}) {
    auto d = corpus::load(n);
    auto cm = orientable_double_cover(d);
    auto b = edge_representativity(d, default_max_curve_length(d));
    auto c = edge_representativity(cm.cover, default_max_curve_length(cm.cover));
    if (b.kind == Representativity::Value && c.kind == Representativity::Value) CHECK(c.value >= b.value);
  }
}
