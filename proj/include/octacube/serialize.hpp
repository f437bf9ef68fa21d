#pragma once
// JSON forms of the main structures. Keys keep insertion order, so output is byte-stable.

#include <string>

#include <nlohmann/json.hpp>

#include "octacube/cover.hpp"
#include "octacube/cubes.hpp"
#include "octacube/dehn.hpp"
#include "octacube/octa.hpp"
#include "octacube/tet.hpp"

namespace octacube {

using Json = nlohmann::ordered_json;

Json to_json(const SurfaceDiagram& d);  // input cells plus derived invariants
SurfaceDiagram diagram_from_json(const Json& j);
bool same_structure(const SurfaceDiagram& a, const SurfaceDiagram& b);

Json to_json(const OctahedralDecomposition& od);
OctahedralDecomposition decomposition_from_json(const Json& j);

Json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);
// format: "json", "gluing-table" (alias "tri"); throws std::invalid_argument otherwise
std::string export_triangulation(const Triangulation& t, const std::string& format);

Json to_json(const HomologyGroup& g);
Json to_json(const HomologyResult& h);
Json to_json(const CheckReport& r);
Json to_json(const NPCReport& r);
Json to_json(const std::vector<Hyperplane>& hs);
Json cube_complex_json(const CubeComplex& cc);  // gluing table and vertex classes
Json to_json(const DehnComplex& dc);
Json to_json(const GroupPresentation& p);
Json cover_json(const CoverMap& cm);  // correspondence table

std::string dump(const Json& j);  // 2-space indent, trailing newline

}  // namespace octacube
