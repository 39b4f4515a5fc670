#include "regcl/io.hpp"

#include <fstream>
#include <sstream>

namespace regcl::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::string str_at(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(where, "expected a string");
}

std::vector<std::string> strings_at(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  const Json& a = array_at(j, where);
  for (size_t i = 0; i < a.size(); ++i) out.push_back(str_at(a[i], where + "/" + std::to_string(i)));
  return out;
}

int index_at(const GroundSet& g, const Json& j, const std::string& where) {
  std::string name = str_at(j, where);
  int i = g.find(name);
  if (i < 0) fail(where, "unknown label \"" + name + "\"");
  return i;
}

ElementSet set_at(const GroundSet& g, const Json& j, const std::string& where) {
  ElementSet s;
  const Json& a = array_at(j, where);
  for (size_t i = 0; i < a.size(); ++i) s.insert(index_at(g, a[i], where + "/" + std::to_string(i)));
  return s;
}

Rational rational_at(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational as a string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

RationalVector vector_at(const Json& j, const std::string& where) {
  RationalVector v;
  const Json& a = array_at(j, where);
  for (size_t i = 0; i < a.size(); ++i) v.push_back(rational_at(a[i], where + "/" + std::to_string(i)));
  return v;
}

Json vector_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(format_rational(q));
  return a;
}

}  // namespace

std::string position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    std::string msg = e.what();
    auto k = msg.find("syntax error");
    throw Error(ErrorCode::ParseError,
                position(text, byte) + ": " + (k == std::string::npos ? msg : msg.substr(k)));
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  try {
    return parse(os.str());
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path + ", " + std::string(e.what()).substr(12));
  }
}

ClosureSpace space_from_json(const Json& j) {
  GroundSet g(strings_at(field(j, "labels", "/"), "/labels"));
  std::string backend = j.contains("backend") ? str_at(j["backend"], "/backend") : "implications";
  if (backend == "implications") {
    std::vector<Rule> rules;
    const Json& rs = j.contains("rules") ? array_at(j["rules"], "/rules") : Json::array();
    for (size_t i = 0; i < rs.size(); ++i) {
      std::string w = "/rules/" + std::to_string(i);
      ElementSet prem = set_at(g, field(rs[i], "premise", w), w + "/premise");
      const Json& c = field(rs[i], "conclusion", w);
      std::vector<int> concl;
      if (c.is_array()) {
        for (size_t k = 0; k < c.size(); ++k) concl.push_back(index_at(g, c[k], w + "/conclusion"));
      } else {
        concl.push_back(index_at(g, c, w + "/conclusion"));
      }
      for (int x : concl) {
        if (prem.contains(x)) fail(w, "conclusion belongs to the premise");
        rules.push_back({prem, x});
      }
    }
    return ClosureSpace::implications(std::move(g), std::move(rules));
  }
  if (backend == "intersections") {
    std::vector<ElementSet> gens;
    const Json& gs = array_at(field(j, "generators", "/"), "/generators");
    for (size_t i = 0; i < gs.size(); ++i)
      gens.push_back(set_at(g, gs[i], "/generators/" + std::to_string(i)));
    return ClosureSpace::intersections(std::move(g), std::move(gens));
  }
  fail("/backend", "unknown backend \"" + backend + "\"");
}

Json space_to_json(const ClosureSpace& s) {
  Json j;
  j["labels"] = s.ground().labels();
  auto names = [&](const ElementSet& x) { return s.ground().names(x); };
  if (s.backend() == Backend::Intersections) {
    j["backend"] = "intersections";
    Json gs = Json::array();
    for (const auto& g : s.generators()) gs.push_back(names(g));
    j["generators"] = gs;
  } else if (s.backend() == Backend::Implications) {
    j["backend"] = "implications";
    Json rs = Json::array();
    for (const auto& r : s.rules())
      rs.push_back({{"premise", names(r.premise)}, {"conclusion", s.ground().label(r.conclusion)}});
    j["rules"] = rs;
  } else {
    // Oracle spaces are written as their closed sets.
    j["backend"] = "intersections";
    Json gs = Json::array();
    for (const auto& c : enumerate_closed(s)) gs.push_back(names(c));
    j["generators"] = gs;
  }
  return j;
}

FiniteLattice lattice_from_json(const Json& j) {
  const Json& m = array_at(field(j, "leq", "/"), "/leq");
  int n = static_cast<int>(m.size());
  if (j.contains("size") && (!j["size"].is_number_integer() || j["size"].get<int>() != n))
    fail("/size", "size differs from the leq matrix");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a) {
    std::string w = "/leq/" + std::to_string(a);
    const Json& row = array_at(m[a], w);
    if (static_cast<int>(row.size()) != n) fail(w, "row length differs from size");
    for (int b = 0; b < n; ++b) {
      const Json& v = row[b];
      if (v.is_boolean()) leq[a][b] = v.get<bool>();
      else if (v.is_number_integer() && (v == 0 || v == 1)) leq[a][b] = v == 1;
      else fail(w + "/" + std::to_string(b), "expected 0, 1, true or false");
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = strings_at(j["labels"], "/labels");
  FiniteLattice L = FiniteLattice::from_leq(leq, labels);
  if (j.contains("ortho") && !j["ortho"].is_null()) {
    std::vector<int> o;
    const Json& a = array_at(j["ortho"], "/ortho");
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_number_integer()) fail("/ortho/" + std::to_string(i), "expected an index");
      o.push_back(a[i].get<int>());
    }
    L.set_ortho(std::move(o));
  }
  return L;
}

Json lattice_to_json(const FiniteLattice& L) {
  Json j;
  j["size"] = L.size();
  j["labels"] = L.labels();
  Json m = Json::array();
  for (const auto& row : L.leq_matrix()) {
    Json r = Json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    m.push_back(r);
  }
  j["leq"] = m;
  if (L.has_ortho()) j["ortho"] = *L.ortho_map();
  return j;
}

Graph graph_from_json(const Json& j) {
  GroundSet g(strings_at(field(j, "vertices", "/"), "/vertices"));
  std::vector<std::pair<int, int>> edges;
  const Json& es = j.contains("edges") ? array_at(j["edges"], "/edges") : Json::array();
  for (size_t i = 0; i < es.size(); ++i) {
    std::string w = "/edges/" + std::to_string(i);
    const Json& e = array_at(es[i], w);
    if (e.size() != 2) fail(w, "an edge has two endpoints");
    edges.emplace_back(index_at(g, e[0], w + "/0"), index_at(g, e[1], w + "/1"));
  }
  return Graph(std::move(g), edges);
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertices().labels();
  Json es = Json::array();
  for (auto [u, v] : g.edges()) es.push_back({g.vertices().label(u), g.vertices().label(v)});
  j["edges"] = es;
  return j;
}

JoinSemilattice semilattice_from_json(const Json& j) {
  if (j.contains("join")) {
    const Json& t = array_at(j["join"], "/join");
    int n = static_cast<int>(t.size());
    GroundSet g = j.contains("elements") ? GroundSet(strings_at(j["elements"], "/elements"))
                                         : GroundSet::numbered(n);
    if (g.size() != n) fail("/join", "table size differs from the element list");
    std::vector<std::vector<int>> join(n);
    for (int a = 0; a < n; ++a) {
      std::string w = "/join/" + std::to_string(a);
      const Json& row = array_at(t[a], w);
      for (size_t b = 0; b < row.size(); ++b) {
        const Json& v = row[b];
        if (v.is_number_integer()) join[a].push_back(v.get<int>());
        else join[a].push_back(index_at(g, v, w + "/" + std::to_string(b)));
      }
    }
    return JoinSemilattice::from_join_table(std::move(g), join);
  }
  GroundSet g(strings_at(field(j, "elements", "/"), "/elements"));
  std::vector<std::pair<int, int>> pairs;
  const Json& os = j.contains("order") ? array_at(j["order"], "/order") : Json::array();
  for (size_t i = 0; i < os.size(); ++i) {
    std::string w = "/order/" + std::to_string(i);
    const Json& e = array_at(os[i], w);
    if (e.size() != 2) fail(w, "an order pair has two entries");
    pairs.emplace_back(index_at(g, e[0], w + "/0"), index_at(g, e[1], w + "/1"));
  }
  int n = g.size();
  return JoinSemilattice::from_order(std::move(g), Order::from_pairs(n, pairs));
}

Json semilattice_to_json(const JoinSemilattice& s) {
  Json j;
  j["elements"] = s.ground().labels();
  Json os = Json::array();
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if (a != b && s.leq(a, b)) os.push_back({s.ground().label(a), s.ground().label(b)});
  j["order"] = os;
  return j;
}

PointConfiguration points_from_json(const Json& j) {
  const Json& ps = array_at(field(j, "points", "/"), "/points");
  std::vector<RationalVector> pts;
  for (size_t i = 0; i < ps.size(); ++i) pts.push_back(vector_at(ps[i], "/points/" + std::to_string(i)));
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = strings_at(j["labels"], "/labels");
  return PointConfiguration(std::move(pts), std::move(labels));
}

Json points_to_json(const PointConfiguration& E) {
  Json j;
  Json ps = Json::array();
  for (const auto& p : E.points()) ps.push_back(vector_json(p));
  j["points"] = ps;
  j["labels"] = E.labels();
  return j;
}

CentralArrangement arrangement_from_json(const Json& j) {
  const Json& ns = array_at(field(j, "normals", "/"), "/normals");
  std::vector<RationalVector> normals;
  for (size_t i = 0; i < ns.size(); ++i)
    normals.push_back(vector_at(ns[i], "/normals/" + std::to_string(i)));
  return CentralArrangement(std::move(normals), vector_at(field(j, "base", "/"), "/base"));
}

Json arrangement_to_json(const CentralArrangement& A) {
  Json j;
  Json ns = Json::array();
  for (const auto& z : A.normals()) ns.push_back(vector_json(z));
  j["normals"] = ns;
  j["base"] = vector_json(A.base());
  return j;
}

}  // namespace regcl::io
