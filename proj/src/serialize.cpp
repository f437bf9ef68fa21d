#include "octacube/serialize.hpp"

#include <stdexcept>

namespace octacube {

namespace {
VertexRole role_from(const std::string& s) {
  for (auto r : {VertexRole::OverCusp, VertexRole::UnderCusp, VertexRole::ConeUp, VertexRole::ConeDown})
    if (s == role_name(r)) return r;
  throw ParseError("unknown vertex role " + s);
}

template <class F>
auto guarded(const char* what, F f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}
}  // namespace

Json to_json(const SurfaceDiagram& d) {
  Json j;
  j["format"] = "surface-diagram v1";
  Json xs = Json::array();
  for (auto& x : d.crossings) xs.push_back({{"id", x.id}, {"over", x.over02 ? "02" : "13"}});
  j["crossings"] = xs;
  Json es = Json::array();
  for (auto& e : d.edges) {
    Json ends = Json::array();
    for (auto& en : e.ends) ends.push_back({{"crossing", d.crossings[en.crossing].id}, {"slot", en.slot}});
    es.push_back({{"id", e.id}, {"ends", ends}, {"flipped", e.flipped}});
  }
  j["edges"] = es;
  Json inv;
  inv["c"] = d.c();
  inv["chi"] = d.chi;
  inv["orientable"] = d.orientable;
  inv["regions"] = d.num_regions();
  inv["components"] = d.num_components();
  Json degs = Json::array();
  for (auto& r : d.regions) degs.push_back(r.degree());
  inv["region_degrees"] = degs;
  j["derived"] = inv;
  return j;
}

SurfaceDiagram diagram_from_json(const Json& j) {
  return guarded("diagram json", [&] {
    SurfaceDiagram d;
    std::map<std::string, int> ids;
    for (auto& x : j.at("crossings")) {
      Crossing c;
      c.id = x.at("id").get<std::string>();
      auto ov = x.at("over").get<std::string>();
      if (ov != "02" && ov != "13") throw ParseError("over must be 02 or 13");
      c.over02 = ov == "02";
      if (!ids.emplace(c.id, d.c()).second) throw ParseError("duplicate crossing " + c.id);
      d.crossings.push_back(c);
    }
    for (auto& e : j.at("edges")) {
      DiagramEdge E;
      E.id = e.at("id").get<std::string>();
      auto& ends = e.at("ends");
      if (ends.size() != 2) throw ParseError("edge " + E.id + " needs two ends");
      for (int i = 0; i < 2; ++i) {
        auto cid = ends[i].at("crossing").get<std::string>();
        if (!ids.count(cid)) throw ParseError("unknown crossing " + cid);
        E.ends[i] = {ids[cid], ends[i].at("slot").get<int>()};
      }
      E.flipped = e.at("flipped").get<bool>();
      E.midpoint = d.num_edges();
      d.edges.push_back(E);
    }
    d.finalize();
    return d;
  });
}

bool same_structure(const SurfaceDiagram& a, const SurfaceDiagram& b) {
  return a.crossings == b.crossings && a.edges == b.edges;
}

Json to_json(const OctahedralDecomposition& od) {
  Json j;
  j["format"] = "octahedral-decomposition v1";
  j["orientable_ambient"] = od.orientable_ambient;
  Json os = Json::array();
  for (auto& o : od.octahedra) {
    Json vs = Json::array();
    for (auto& v : o.vertices) vs.push_back({{"role", role_name(v.role)}, {"slot", v.slot}});
    os.push_back({{"crossing", o.crossing}, {"vertices", vs}, {"equatorial_region", o.equatorial_region}});
  }
  j["octahedra"] = os;
  Json gs = Json::array();
  for (auto& g : od.gluings)
    gs.push_back({{"source", {g.source.oct, g.source.face}},
                  {"target", {g.target.oct, g.target.face}},
                  {"vertex_map", g.vertex_map},
                  {"edge", g.edge},
                  {"flipped", g.flipped}});
  j["gluings"] = gs;
  Json rs = Json::array();
  for (size_t r = 0; r < od.region_edge_cycles.size(); ++r) {
    Json cyc = Json::array();
    for (auto [o, k] : od.region_edge_cycles[r]) cyc.push_back({o, k});
    rs.push_back({{"degree", od.region_degree[r]}, {"shaded", od.region_shaded[r]}, {"edge_cycle", cyc}});
  }
  j["regions"] = rs;
  return j;
}

OctahedralDecomposition decomposition_from_json(const Json& j) {
  return guarded("decomposition json", [&] {
    OctahedralDecomposition od;
    od.orientable_ambient = j.at("orientable_ambient").get<bool>();
    for (auto& o : j.at("octahedra")) {
      Octahedron O;
      O.crossing = o.at("crossing").get<int>();
      auto& vs = o.at("vertices");
      if (vs.size() != 6) throw ParseError("octahedron needs 6 vertices");
      for (int i = 0; i < 6; ++i) O.vertices[i] = {role_from(vs[i].at("role").get<std::string>()), vs[i].at("slot").get<int>()};
      O.equatorial_region = o.at("equatorial_region").get<std::array<int, 4>>();
      od.octahedra.push_back(O);
    }
    for (auto& g : j.at("gluings")) {
      FaceGluing G;
      auto s = g.at("source").get<std::array<int, 2>>(), t = g.at("target").get<std::array<int, 2>>();
      G.source = {s[0], s[1]};
      G.target = {t[0], t[1]};
      G.vertex_map = g.at("vertex_map").get<std::array<int, 3>>();
      G.edge = g.at("edge").get<int>();
      G.flipped = g.at("flipped").get<bool>();
      od.gluings.push_back(G);
    }
    for (auto& r : j.at("regions")) {
      od.region_degree.push_back(r.at("degree").get<int>());
      od.region_shaded.push_back(r.at("shaded").get<int>());
      std::vector<std::pair<int, int>> cyc;
      for (auto& p : r.at("edge_cycle")) cyc.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
      od.region_edge_cycles.push_back(cyc);
    }
    return od;
  });
}

namespace {
std::string perm_code(const std::array<int, 4>& p) {
  std::string s;
  for (int v : p) s += static_cast<char>('0' + v);
  return s;
}
}  // namespace

Json to_json(const Triangulation& t) {
  Json j;
  j["format"] = "octa-tri v1";
  j["vertex_roles"] = {"ideal-over", "ideal-under", "truncated", "truncated"};
  Json ts = Json::array();
  for (int a = 0; a < t.size(); ++a) {
    auto& T = t.tets[a];
    Json perms = Json::array();
    for (auto& p : T.perm) perms.push_back(perm_code(p));
    ts.push_back({{"id", a}, {"neighbors", T.neighbor}, {"perms", perms}, {"octahedron", T.oct}, {"quadrant", T.quadrant}});
  }
  j["tetrahedra"] = ts;
  j["edge_classes"] = t.num_edge_classes;
  return j;
}

Triangulation triangulation_from_json(const Json& j) {
  return guarded("triangulation json", [&] {
    Triangulation t;
    for (auto& x : j.at("tetrahedra")) {
      Tetrahedron T;
      if (x.at("id").get<int>() != t.size()) throw ParseError("tetrahedra out of order");
      T.neighbor = x.at("neighbors").get<std::array<int, 4>>();
      auto& perms = x.at("perms");
      if (perms.size() != 4) throw ParseError("need 4 permutations");
      for (int f = 0; f < 4; ++f) {
        auto s = perms[f].get<std::string>();
        if (s.size() != 4) throw ParseError("bad permutation code " + s);
        for (int v = 0; v < 4; ++v) {
          if (s[v] < '0' || s[v] > '3') throw ParseError("bad permutation code " + s);
          T.perm[f][v] = s[v] - '0';
        }
      }
      T.oct = x.at("octahedron").get<int>();
      T.quadrant = x.at("quadrant").get<int>();
      t.tets.push_back(T);
    }
    t.compute_edge_classes();
    return t;
  });
}

std::string export_triangulation(const Triangulation& t, const std::string& format) {
  if (format == "json") return dump(to_json(t));
  if (format == "gluing-table" || format == "tri") return export_gluing_table(t);
  throw std::invalid_argument("unsupported triangulation format: " + format);
}

Json to_json(const HomologyGroup& g) {
  return Json{{"betti", g.betti}, {"torsion", g.torsion}, {"text", g.to_string()}};
}

Json to_json(const HomologyResult& h) {
  Json j = Json::array();
  for (auto& g : h.groups) j.push_back(to_json(g));
  return j;
}

Json to_json(const CheckReport& r) { return Json{{"ok", r.ok}, {"failures", r.failures}}; }

Json to_json(const NPCReport& r) {
  Json j;
  j["overall"] = r.flag() ? "flag" : "not-flag";
  Json vs = Json::array();
  for (auto& e : r.per_vertex)
    vs.push_back({{"vertex", e.vertex},
                  {"class", vertex_class_name(e.cls)},
                  {"verdict", verdict_name(e.verdict.kind)},
                  {"witness", e.verdict.witness}});
  j["vertices"] = vs;
  return j;
}

Json to_json(const std::vector<Hyperplane>& hs) {
  Json j = Json::array();
  for (auto& h : hs)
    j.push_back({{"type", h.type},
                 {"midcubes", h.midcubes.size()},
                 {"euler_characteristic", h.euler_characteristic},
                 {"boundary_edges", h.boundary_edges},
                 {"orientable", h.orientable}});
  return j;
}

Json cube_complex_json(const CubeComplex& cc) {
  Json j;
  j["cells"] = cc.count;
  Json cubes = Json::array();
  for (int q = 0; q < cc.num_cubes; ++q) {
    Json cls = Json::array();
    for (auto c : cc.corner_class[q]) cls.push_back(vertex_class_name(c));
    auto& s = cc.source[q];
    cubes.push_back({{"cube", q}, {"octahedron", s.oct}, {"cusp", s.cusp}, {"half", s.half}, {"copy", s.copy}, {"corner_classes", cls}});
  }
  j["cubes"] = cubes;
  Json gs = Json::array();
  for (auto& g : cc.gluings)
    gs.push_back({{"cube_a", g.cube_a}, {"face_a", g.face_a}, {"cube_b", g.cube_b}, {"face_b", g.face_b}, {"corner_map", g.corner_map}});
  j["gluings"] = gs;
  Json vc = Json::array();
  for (auto c : cc.vertex_class) vc.push_back(vertex_class_name(c));
  j["vertex_classes"] = vc;
  j["defects"] = cc.defects;
  return j;
}

Json to_json(const DehnComplex& dc) {
  Json j;
  j["vertices"] = dc.num_vertices;
  Json es = Json::array();
  for (auto& e : dc.edges) es.push_back({{"region", e.region}, {"tail", e.tail}, {"head", e.head}, {"shaded", e.shaded}});
  j["edges"] = es;
  Json ss = Json::array();
  for (auto& s : dc.squares)
    ss.push_back({{"crossing", s.crossing}, {"corner_vertex", s.corner_vertex}, {"side_edge", s.side_edge}, {"side_sign", s.side_sign}});
  j["squares"] = ss;
  return j;
}

Json to_json(const GroupPresentation& p) {
  Json j;
  j["generators"] = p.generators;
  j["collapsed"] = p.collapsed;
  Json rs = Json::array();
  for (size_t i = 0; i < p.relators.size(); ++i) {
    std::string w;
    for (auto [g, e] : p.relators[i]) {
      if (!w.empty()) w += ' ';
      w += p.generators[g];
      if (e != 1) w += "^" + std::to_string(e);
    }
    rs.push_back({{"name", p.relator_names[i]}, {"word", w}});
  }
  j["relators"] = rs;
  return j;
}

Json cover_json(const CoverMap& cm) {
  Json j;
  auto& cv = cm.cover;
  Json xs = Json::array();
  for (int A = 0; A < cm.base.c(); ++A)
    xs.push_back({{"base", cm.base.crossings[A].id},
                  {"lifts", {cv.crossings[cm.crossing_lift[A][0]].id, cv.crossings[cm.crossing_lift[A][1]].id}}});
  j["crossings"] = xs;
  Json es = Json::array();
  for (int e = 0; e < cm.base.num_edges(); ++e)
    es.push_back({{"base", cm.base.edges[e].id}, {"lifts", {cv.edges[cm.edge_lift[e][0]].id, cv.edges[cm.edge_lift[e][1]].id}}});
  j["edges"] = es;
  Json rs = Json::array();
  for (int r = 0; r < cm.base.num_regions(); ++r) rs.push_back({{"base", r}, {"lifts", cm.region_lift[r]}});
  j["regions"] = rs;
  Json deck;
  deck["crossings"] = cm.deck_crossing;
  deck["edges"] = cm.deck_edge;
  deck["regions"] = cm.deck_region;
  j["deck"] = deck;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace octacube
