#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "octacube/cubes.hpp"
#include "octacube/dehn.hpp"
#include "oracles.hpp"

using namespace octacube;

namespace {
CubeComplex cubes_of(const std::string& n) {
  auto d = corpus::load(n);
  return cube_complex_from_octahedra(build_decomposition_any(d, try_checkerboard_coloring(d)));
}
}  // namespace

TEST_CASE("figure-eight cube complex") {
  auto cc = cubes_of("figure_eight");
  CHECK(cc.num_cubes == 16);
  CHECK(cc.count == std::array<int, 4>{21, 61, 56, 16});
  CHECK(cc.defects.empty());
  int pp = 0, pm = 0;
  for (auto c : cc.vertex_class) pp += c == VertexClass::PPlus, pm += c == VertexClass::PMinus;
  CHECK(pp == 1);
  CHECK(pm == 1);
  auto h = homology(cc);
  CHECK(h.H(0).to_string() == "Z");
  CHECK(h.H(1).to_string() == "Z");
  CHECK(h.H(2).to_string() == "0");
  CHECK(h.H(3).to_string() == "0");
  CHECK(check_npc(cc).flag());
}

TEST_CASE("figure-eight hyperplanes") {
  auto hs = hyperplanes(cubes_of("figure_eight"));
  std::map<std::string, std::vector<Hyperplane>> by;
  for (auto& h : hs) by[h.type].push_back(h);
  REQUIRE(by["shaded-parallel"].size() == 1);
  CHECK(by["shaded-parallel"][0].euler_characteristic == -2);
  REQUIRE(by["checkerboard-unshaded"].size() == 1);
  CHECK(by["checkerboard-unshaded"][0].euler_characteristic == -1);
  CHECK_FALSE(by["checkerboard-unshaded"][0].orientable);
  REQUIRE(by["dehn"].size() == 1);
  CHECK(by["dehn"][0].euler_characteristic == 0);
}

TEST_CASE("double along the boundary") {
  auto cc = cubes_of("figure_eight");
  auto dbl = double_complex(cc);
  CHECK(dbl.num_cubes == 32);
  CHECK(dbl.defects.empty());
  CHECK(check_npc(dbl).flag());
  CHECK_THROWS_AS(double_complex(dbl), std::invalid_argument);
}

TEST_CASE("uncolorable input is refused") {
  auto d = corpus::load("torus_one_crossing");
  CHECK_THROWS_AS(cube_complex_from_octahedra(build_decomposition_any(d, std::nullopt)), NotColorable);
}

TEST_CASE("link verdicts") {
  CHECK(check_npc(cubes_of("square_weave8")).flag());
  auto sw = check_npc(cubes_of("square_weave"));
  CHECK_FALSE(sw.flag());
  bool not_simplicial = false;
  for (auto& e : sw.per_vertex) not_simplicial |= e.verdict.kind == FlagVerdict::NotSimplicial;
  CHECK(not_simplicial);
  auto t = oracle::three_cubes_at_corner();
  auto v = is_flag(vertex_link(t, t.vertex_at(0, 0)));
  CHECK(v.kind == FlagVerdict::NotFlag);
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("is_flag matches brute force on all links") {
  for (auto& n : corpus::named_examples()) {
    auto d = corpus::load(n);
    if (!try_checkerboard_coloring(d)) continue;
    auto cc = cubes_of(n);
    for (int v = 0; v < cc.vertices(); ++v) {
      auto l = vertex_link(cc, v);
      CHECK(is_flag(l).kind == oracle::brute_flag(l));
    }
  }
}

TEST_CASE("Link(P+) is the crossing-subdivided dual") {
  for (std::string n : {"figure_eight", "trefoil", "square_weave8", "torus_link2"}) {
    INFO(n);
    auto d = corpus::load(n);
    auto cc = cubes_of(n);
    auto dual = link_incidence_graph(subdivided_dual_link(d));
    for (int v = 0; v < cc.vertices(); ++v)
      if (cc.vertex_class[v] == VertexClass::PPlus || cc.vertex_class[v] == VertexClass::PMinus)
        CHECK(isomorphic(link_incidence_graph(vertex_link(cc, v)), dual));
  }
}

TEST_CASE("essential edge certificates follow the NPC verdict") {
  auto cc = cubes_of("square_weave8");
  for (auto& e : essential_edges_certificate(cc, check_npc(cc))) CHECK(e.status == "essential (NPC certificate)");
  auto k = cubes_of("square_weave");
  bool undetermined = false;
  for (auto& e : essential_edges_certificate(k, check_npc(k))) undetermined |= e.status != "essential (NPC certificate)";
  CHECK(undetermined);
}

TEST_CASE("retraction onto the Dehn complex") {
  for (std::string n : {"figure_eight", "square_weave8", "klein_2_6"}) {
    INFO(n);
    auto d = corpus::load(n);
    auto cc = cubes_of(n);
    auto r = retraction_to_dehn(cc);
    CHECK(r.commutes);
    CHECK(r.idempotent);
    auto dc = coned_dehn_complex(d, checkerboard_coloring(d));
    CHECK(isomorphic(retraction_image_graph(cc, r), dehn_incidence_graph(dc)));
  }
}
