#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "octacube/octa.hpp"

using namespace octacube;

namespace {
OctahedralDecomposition fig8() {
  auto d = corpus::load("figure_eight");
  return build_octahedral_decomposition(d, checkerboard_coloring(d));
}
bool has_failure(const CheckReport& r, const std::string& prefix) {
  for (auto& f : r.failures)
    if (f.rfind(prefix, 0) == 0) return true;
  return false;
}
}  // namespace

TEST_CASE("figure-eight decomposition") {
  auto od = fig8();
  CHECK(od.c() == 4);
  CHECK(od.gluings.size() == 16);
  auto r = validate_decomposition(od);
  CHECK(r.ok);
  for (auto& o : od.octahedra) {
    CHECK(o.vertices[0].role == VertexRole::OverCusp);
    CHECK(o.vertices[1].role == VertexRole::UnderCusp);
    for (int f = 0; f < 8; ++f) {
      auto v = Octahedron::face_vertices(f);
      bool up1 = o.vertices[v[1]].role == VertexRole::ConeUp, up2 = o.vertices[v[2]].role == VertexRole::ConeUp;
      CHECK(up1 != up2);
    }
  }
}

TEST_CASE("region cycles match degrees") {
  auto d = corpus::load("figure_eight");
  auto od = fig8();
  auto cyc = walk_region_cycles(od);
  CHECK(static_cast<int>(cyc.size()) == d.num_regions());
  int total = 0;
  for (auto& c : cyc) {
    int r = od.octahedra[c[0].first].equatorial_region[c[0].second];
    CHECK(static_cast<int>(c.size()) == d.regions[r].degree());
    total += static_cast<int>(c.size());
  }
  CHECK(total == 4 * od.c());
}

TEST_CASE("mutations are caught with witnesses") {
  auto od = fig8();
  SECTION("face glued to itself") {
    od.gluings[0].target = od.gluings[0].source;
    auto r = validate_decomposition(od);
    CHECK_FALSE(r.ok);
    CHECK(has_failure(r, "a:"));
  }
  SECTION("swapped equatorial vertices") {
    std::swap(od.gluings[3].vertex_map[1], od.gluings[3].vertex_map[2]);
    auto r = validate_decomposition(od);
    CHECK_FALSE(r.ok);
    CHECK(has_failure(r, "b:"));
  }
  SECTION("wrong region tag") {
    od.octahedra[1].equatorial_region[0] = od.octahedra[1].equatorial_region[1];
    CHECK_FALSE(validate_decomposition(od).ok);
  }
}

TEST_CASE("builders guard the surface type") {
  auto k = corpus::load("klein_2_6");
  CHECK_THROWS_AS(build_octahedral_decomposition(k, checkerboard_coloring(k)), ValidationError);
  CHECK_THROWS_AS(build_nonorientable_decomposition(corpus::load("figure_eight")), ValidationError);
  auto od = build_nonorientable_decomposition(k);
  CHECK(od.c() == 2);
  CHECK_FALSE(od.orientable_ambient);
  CHECK(validate_decomposition(od).ok);
}

TEST_CASE("all examples decompose validly") {
  for (auto& n : corpus::named_examples()) {
    INFO(n);
    auto d = corpus::load(n);
    auto od = build_decomposition_any(d, try_checkerboard_coloring(d));
    CHECK(od.c() == d.c());
    CHECK(static_cast<int>(od.gluings.size()) == 4 * d.c());
    CHECK(validate_decomposition(od).ok);
  }
}
