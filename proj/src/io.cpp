#include "grascat/io.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>

#include "grascat/error.hpp"

namespace grascat {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(const Tableau& t) { return Json{{"k", t.k}, {"n", t.n}, {"rows", t.rows}}; }

Tableau tableau_from_json(const Json& j) {
  const int k = field<int>(j, "k");
  auto rows = field<std::vector<std::vector<int>>>(j, "rows");
  if (rows.empty()) rows.assign(k, {});
  return make_tableau(k, field<int>(j, "n"), rows);
}

Json to_json(const DominantMonomial& m) {
  Json factors = Json::array();
  for (const auto& [key, mult] : m.factors) factors.push_back({key.first, key.second, mult});
  return Json{{"k", m.k}, {"ell", m.ell}, {"factors", factors}};
}

DominantMonomial monomial_from_json(const Json& j) {
  DominantMonomial m{field<int>(j, "k"), field<int>(j, "ell"), {}};
  for (const auto& f : field<std::vector<std::vector<int>>>(j, "factors")) {
    require(f.size() == 3 || f.size() == 2, ErrorCode::ParseError, "monomial factors are (i, s, multiplicity)");
    m.factors[{f[0], f[1]}] += f.size() == 3 ? f[2] : 1;
  }
  validate(m);
  return m;
}

Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& [from, to] : q.arrows()) arrows.push_back({from, to});
  Json out{{"m", q.m}, {"n_mut", q.n_mut}, {"arrows", arrows}};
  if (!q.coords.empty()) out["coords"] = q.coords;
  return out;
}

Quiver quiver_from_json(const Json& j) {
  Quiver q = make_quiver(field<int>(j, "m"), field<int>(j, "n_mut"),
                         field<std::vector<std::pair<int, int>>>(j, "arrows"));
  if (j.contains("coords")) q.coords = j.at("coords").get<std::vector<std::pair<int, int>>>();
  return q;
}

Json to_json(const Seed& s) {
  Json labels = Json::array();
  for (const Tableau& t : s.labels) labels.push_back(to_json(t));
  return Json{{"name", s.name}, {"quiver", to_json(s.quiver)}, {"labels", labels}};
}

Seed seed_from_json(const Json& j) {
  Seed s;
  s.name = j.value("name", std::string("seed"));
  s.quiver = quiver_from_json(field<Json>(j, "quiver"));
  for (const Json& t : field<Json>(j, "labels")) s.labels.push_back(tableau_from_json(t));
  require(static_cast<int>(s.labels.size()) == s.quiver.m, ErrorCode::ParseError, "label count differs from vertex count");
  return s;
}

Json to_json(const GVector& g, const Seed& s) {
  Json labels = Json::array();
  for (const Tableau& t : s.labels) {
    labels.push_back(t.columns() == 1 ? label(make_ksubset(t.n, t.column(0))) : to_string(t));
  }
  return Json{{"seed", g.seed_name}, {"coords", g.coords}, {"labels", labels}, {"n_mut", s.quiver.n_mut}};
}

GVector gvector_from_json(const Json& j) {
  GVector g;
  g.seed_name = j.value("seed", std::string());
  g.coords = field<std::vector<long long>>(j, "coords");
  return g;
}

Json to_json(const KSubset& s) { return Json{{"n", s.n}, {"elems", s.elems}, {"label", label(s)}}; }

Json to_json(const ConePresentation& cp) {
  Json sub = Json::array();
  Json quot = Json::array();
  for (const KSubset& s : cp.sub) sub.push_back(label(s));
  for (const KSubset& s : cp.quot) quot.push_back(label(s));
  return Json{{"sub", sub}, {"quot", quot}};
}

Json to_json(const Profile& p) {
  Json factors = Json::array();
  for (const KSubset& f : p.factors) factors.push_back(f.elems);
  return Json{{"k", p.k}, {"n", p.n}, {"factors", factors}};
}

Profile profile_from_json(const Json& j) {
  return make_profile(field<int>(j, "k"), field<int>(j, "n"), field<std::vector<std::vector<int>>>(j, "factors"));
}

QuiverWithPotential qp_from_json(const Json& j) {
  QuiverWithPotential qp;
  qp.vertices = field<std::vector<std::string>>(j, "vertices");
  for (const Json& a : field<Json>(j, "arrows")) {
    qp.arrows.push_back(QPArrow{field<std::string>(a, "id"), qp.vertex_index(field<std::string>(a, "from")),
                                qp.vertex_index(field<std::string>(a, "to"))});
  }
  for (const Json& term : field<Json>(j, "potential")) {
    PotentialTerm t;
    t.sign = field<int>(term, "sign");
    for (const auto& id : field<std::vector<std::string>>(term, "cycle")) t.cycle.push_back(qp.arrow_index(id));
    qp.potential.push_back(std::move(t));
  }
  validate(qp);
  return qp;
}

Json to_json(const QuiverWithPotential& qp) {
  Json arrows = Json::array();
  for (const QPArrow& a : qp.arrows) {
    arrows.push_back({{"id", a.id}, {"from", qp.vertices[a.from]}, {"to", qp.vertices[a.to]}});
  }
  Json potential = Json::array();
  for (const PotentialTerm& t : qp.potential) {
    Json cycle = Json::array();
    for (int a : t.cycle) cycle.push_back(qp.arrows[a].id);
    potential.push_back({{"sign", t.sign}, {"cycle", cycle}});
  }
  return Json{{"vertices", qp.vertices}, {"arrows", arrows}, {"potential", potential}};
}

std::string data_dir() {
  if (const char* env = std::getenv("GRASCAT_DATA")) return env;
  return GRASCAT_DATA_DIR;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, "invalid JSON in " + path + ": " + e.what());
  }
}

Json load_fixture(const std::string& name) { return load_json_file(data_dir() + "/" + name + ".json"); }

Seed named_seed(const std::string& name) {
  static const std::regex pattern(R"(gr(\d+)_(\d+))");
  std::smatch match;
  require(std::regex_match(name, match, pattern), ErrorCode::BadParameters,
          "unknown seed '" + name + "' (expected gr<k>_<n>)");
  return grassmannian_initial_seed(std::stoi(match[1]), std::stoi(match[2]));
}

}  // namespace grascat
