#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "octacube/serialize.hpp"

using namespace octacube;

TEST_CASE("diagram json round trip") {
  for (auto& n : corpus::named_examples()) {
    INFO(n);
    auto d = corpus::load(n);
    auto j = to_json(d);
    CHECK(j.begin().key() == "format");
    auto back = diagram_from_json(j);
    CHECK(same_structure(back, d));
    CHECK(dump(to_json(back)) == dump(j));
  }
}

TEST_CASE("decomposition and triangulation round trips") {
  for (auto& n : corpus::named_examples()) {
    INFO(n);
    auto d = corpus::load(n);
    auto od = build_decomposition_any(d, try_checkerboard_coloring(d));
    CHECK(decomposition_from_json(to_json(od)) == od);
    auto t = triangulate(od);
    CHECK(triangulation_from_json(to_json(t)).tets == t.tets);
    CHECK(parse_gluing_table(export_triangulation(t, "tri")).tets == t.tets);
  }
}

TEST_CASE("malformed json is a parse error") {
  CHECK_THROWS_AS(diagram_from_json(Json::object()), ParseError);
  CHECK_THROWS_AS(decomposition_from_json(Json{{"orientable_ambient", true}}), ParseError);
  auto j = to_json(corpus::load("figure_eight"));
  j["crossings"][0]["over"] = "03";
  CHECK_THROWS_AS(diagram_from_json(j), ParseError);
}

TEST_CASE("golden files are byte-stable") {
  for (auto& [file, content] : corpus::golden_artifacts()) {
    INFO(file);
    std::ifstream in(corpus::golden_path(file), std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == content);
  }
}

TEST_CASE("report pieces") {
  HomologyGroup g{2, {2}};
  CHECK(to_json(g)["text"] == "Z^2 + Z/2");
  CheckReport r;
  r.fail("x", "y");
  CHECK(to_json(r)["failures"][0] == "x: y");
}
