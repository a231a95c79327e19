#include "ranstrat/io.hpp"

#include <fstream>
#include <sstream>

#include "ranstrat/errors.hpp"

namespace ranstrat::io {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw ValidationError(std::string("expected an object holding \"") + name + "\"");
  auto it = j.find(name);
  if (it == j.end()) throw ValidationError(std::string("missing field \"") + name + "\"");
  return *it;
}

template <class T>
T get(const Json& j, const char* name) {
  try {
    return field(j, name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("field \"") + name + "\": " + e.what());
  }
}

const char* case_name(SafeBallCase c) { return c == SafeBallCase::boundary ? "boundary" : "generic"; }

Json optional_point(const std::optional<RanPoint>& x) { return x ? to_json(*x) : Json(nullptr); }

}  // namespace

Json to_json(const SimplicialComplex& c) {
  return Json{{"n_vertices", c.n_vertices()}, {"simplices", c.simplices()}};
}

SimplicialComplex complex_from_json(const Json& j) {
  const auto n = get<std::size_t>(j, "n_vertices");
  const auto simplices = get<std::vector<Simplex>>(j, "simplices");
  return make_complex(n, simplices);
}

Json to_json(const PointConfig& p) { return Json{{"dim", p.dim()}, {"points", p.points()}}; }

PointConfig points_from_json(const Json& j) {
  return PointConfig(get<std::size_t>(j, "dim"), get<std::vector<Point>>(j, "points"));
}

Json to_json(const RanPoint& x) {
  Json j = to_json(x.config);
  j["radius"] = x.radius;
  return j;
}

RanPoint ran_point_from_json(const Json& j) { return RanPoint(points_from_json(j), get<double>(j, "radius")); }

Json to_json(const SimplicialMap& f) {
  return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"vertex_map", f.vertex_map()}};
}

SimplicialMap map_from_json(const Json& j) {
  return SimplicialMap(complex_from_json(field(j, "source")), complex_from_json(field(j, "target")),
                       get<std::vector<Vertex>>(j, "vertex_map"));
}

Json to_json(const Filtration& f) {
  Json complexes = Json::array();
  for (const auto& c : f.complexes) complexes.push_back(to_json(c));
  Json j = to_json(f.config);
  j["critical_radii"] = f.critical_radii;
  j["complexes"] = std::move(complexes);
  return j;
}

Filtration filtration_from_json(const Json& j) {
  Filtration f{points_from_json(j), get<std::vector<double>>(j, "critical_radii"), {}};
  const Json& cs = field(j, "complexes");
  if (!cs.is_array()) throw ValidationError("field \"complexes\" must be an array");
  for (const auto& c : cs) f.complexes.push_back(complex_from_json(c));
  if (f.complexes.size() != f.critical_radii.size()) {
    throw ValidationError("filtration needs one complex per critical radius");
  }
  return f;
}

Json to_json(const PosetUniverse& u) {
  Json classes = Json::array();
  for (const auto& c : u.classes()) classes.push_back(to_json(c.canonical()));
  Json relation = Json::array();
  for (std::size_t i = 0; i < u.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < u.size(); ++k) row.push_back(u.relation(i, k));
    relation.push_back(std::move(row));
  }
  return Json{{"n_max", u.n_max()}, {"classes", std::move(classes)}, {"relation", std::move(relation)}};
}

PosetUniverse universe_from_json(const Json& j) {
  std::vector<IsoClass> classes;
  const Json& cs = field(j, "classes");
  if (!cs.is_array()) throw ValidationError("field \"classes\" must be an array");
  for (const auto& c : cs) classes.push_back(canonical_form(complex_from_json(c)));
  const auto rows = get<std::vector<std::vector<bool>>>(j, "relation");
  if (rows.size() != classes.size()) throw ValidationError("relation must be square over the classes");
  std::vector<char> relation;
  for (const auto& row : rows) {
    if (row.size() != classes.size()) throw ValidationError("relation must be square over the classes");
    for (bool b : row) relation.push_back(b ? 1 : 0);
  }
  return PosetUniverse(get<std::size_t>(j, "n_max"), std::move(classes), std::move(relation));
}

Json to_json(const StratumLabel& l, const std::optional<SafeBall>& ball) {
  Json j{{"class", to_json(l.cls.canonical())},
         {"name", l.cls.name()},
         {"degenerate", l.degenerate},
         {"degenerate_subsets", l.degenerate_subsets}};
  if (ball) {
    j["r_tilde"] = ball->r_tilde;
    j["safe_radius"] = ball->safe_radius;
    j["case"] = case_name(ball->kind);
  }
  return j;
}

StratumLabel label_from_json(const Json& j) {
  StratumLabel l{canonical_form(complex_from_json(field(j, "class"))), get<bool>(j, "degenerate"),
                 get<std::vector<Simplex>>(j, "degenerate_subsets")};
  return l;
}

Json to_json(const PLPath& p) {
  return Json{{"dim", p.dim()}, {"breakpoints", p.breakpoints()}, {"tracks", p.tracks()}, {"radius", p.radius()}};
}

PLPath path_from_json(const Json& j) {
  return PLPath(get<std::size_t>(j, "dim"), get<std::vector<double>>(j, "breakpoints"),
                get<std::vector<std::vector<Point>>>(j, "tracks"), get<std::vector<double>>(j, "radius"));
}

Json to_json(const ZigzagDiagram& z) {
  Json intervals = Json::array(), instants = Json::array(), maps = Json::array();
  for (const auto& l : z.interval_classes) intervals.push_back(to_json(l));
  for (const auto& l : z.transition_classes) instants.push_back(to_json(l));
  for (const auto& [left, right] : z.maps) maps.push_back(Json{{"left", to_json(left)}, {"right", to_json(right)}});
  return Json{{"times", z.times},
              {"interval_classes", std::move(intervals)},
              {"transition_classes", std::move(instants)},
              {"maps", std::move(maps)}};
}

ZigzagDiagram zigzag_from_json(const Json& j) {
  ZigzagDiagram z;
  z.times = get<std::vector<double>>(j, "times");
  for (const auto& l : field(j, "interval_classes")) z.interval_classes.push_back(label_from_json(l));
  for (const auto& l : field(j, "transition_classes")) z.transition_classes.push_back(label_from_json(l));
  for (const auto& m : field(j, "maps")) {
    z.maps.emplace_back(map_from_json(field(m, "left")), map_from_json(field(m, "right")));
  }
  if (z.interval_classes.size() != z.times.size() + 1 || z.transition_classes.size() != z.times.size() ||
      z.maps.size() != z.times.size()) {
    throw ValidationError("zigzag needs q times, q + 1 intervals, q instants and q map pairs");
  }
  return z;
}

Json to_json(const FiltrationChain& f) {
  Json complexes = Json::array(), maps = Json::array();
  for (const auto& c : f.complexes) complexes.push_back(to_json(c));
  for (const auto& m : f.maps) maps.push_back(to_json(m));
  return Json{{"complexes", std::move(complexes)}, {"maps", std::move(maps)}};
}

Json to_json(const FrontierReport& r) {
  return Json{{"pair", {r.label_a, r.label_b}},
              {"verdict", to_string(r.verdict)},
              {"witnesses",
               {{"boundary", optional_point(r.boundary_witness)}, {"interior", optional_point(r.interior_witness)}}},
              {"evaluations", r.evaluations}};
}

Json to_json(const HasseDiagram& h) {
  Json nodes = Json::array();
  for (const auto& c : h.nodes) nodes.push_back(c.name());
  return Json{{"nodes", std::move(nodes)}, {"cover_edges", h.cover_edges}};
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

}  // namespace ranstrat::io
