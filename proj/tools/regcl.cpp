#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "regcl/convex.hpp"
#include "regcl/graph.hpp"
#include "regcl/io.hpp"
#include "regcl/lattice.hpp"
#include "regcl/semilattice.hpp"
#include "regcl/spaces.hpp"
#include "regcl/verify.hpp"

using namespace regcl;
using Json = io::Json;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string yn(bool b) { return b ? "yes" : "no"; }

Json reg_summary(const RegLattice& reg) {
  const FiniteLattice& L = reg.lattice;
  Json j;
  j["reg"] = L.size();
  auto ci = reg.clopen_indices();
  j["clop"] = ci.size();
  j["sd"] = semidistributivity(L).sd;
  Json rsd = Json::array();
  for (int m = 1; m <= 3; ++m) rsd.push_back(satisfies_rsd(L, m).holds);
  j["rsd"] = rsd;
  j["bounded"] = is_bounded(L).bounded;
  j["pseudocomplemented"] = is_pseudocomplemented(L);
  j["dm_completion_of_clop"] = is_dm_completion(L, ci);
  j["clop_tight"] = is_tight(L, ci).tight;
  j["join_irreducibles"] = join_irreducibles(L).size();
  return j;
}

std::string flags_line(const Json& s) {
  std::ostringstream os;
  os << "SD=" << yn(s["sd"]) << " RSD(1..3)=" << yn(s["rsd"][0]) << "," << yn(s["rsd"][1]) << ","
     << yn(s["rsd"][2]) << " bounded=" << yn(s["bounded"]) << " pseudocomplemented="
     << yn(s["pseudocomplemented"]) << " DM-completion=" << yn(s["dm_completion_of_clop"])
     << " join-irreducibles=" << s["join_irreducibles"].get<int>();
  return os.str();
}

bool is_file(const std::string& input) { return std::filesystem::is_regular_file(input); }

Json load(const std::string& input) { return io::read_file(input); }

Graph graph_input(const std::string& input) {
  if (is_file(input)) return io::graph_from_json(load(input));
  return graphs::by_name(input);
}

JoinSemilattice semilattice_input(const std::string& input) {
  if (is_file(input)) return io::semilattice_from_json(load(input));
  if (input == "psub") return psub_srs();
  if (input.size() >= 2 && input[0] == 'S') return generate_sm(std::stoi(input.substr(1)));
  throw Error(ErrorCode::UnknownName, "no built-in semilattice \"" + input + "\"");
}

CentralArrangement arrangement_input(const std::string& input) {
  if (is_file(input)) return io::arrangement_from_json(load(input));
  if (input.rfind("braid", 0) == 0) return braid_arrangement(std::stoi(input.substr(5)));
  if (input.rfind("lines", 0) == 0) {
    int n = std::stoi(input.substr(5));
    std::vector<Rational> slopes;
    for (int i = 0; i < n; ++i) slopes.push_back(i % 2 ? Rational(-(i + 1) / 2) : Rational(i / 2));
    return lines_arrangement(slopes);
  }
  throw Error(ErrorCode::UnknownName, "no built-in arrangement \"" + input + "\"");
}

struct Analysis {
  Json json;
  std::vector<std::string> lines;
  std::optional<FiniteLattice> lattice;
};

Analysis analyze_space(const ClosureSpace& sp, int bound) {
  Analysis a;
  RegLattice reg = enumerate_regular_closed(sp, bound);
  Json s = reg_summary(reg);
  s["closed"] = enumerate_closed(sp, bound).size();
  s["convex_geometry"] = is_convex_geometry(sp, bound);
  a.lines.push_back("closed=" + std::to_string(s["closed"].get<int>()) + " Clop=" +
                    std::to_string(s["clop"].get<int>()) + " Reg=" + std::to_string(s["reg"].get<int>()) +
                    " convex-geometry=" + yn(s["convex_geometry"]));
  a.lines.push_back(flags_line(s));
  a.json = s;
  a.lattice = reg.lattice;
  return a;
}

Analysis analyze(const std::string& kind, const std::string& input, int bound) {
  Analysis a;
  if (kind == "graph") {
    Graph g = graph_input(input);
    ConnectedCatalog cat = connected_catalog(g);
    RegLattice reg = enumerate_regular_closed(graph_closure_space(cat), bound);
    Json s = reg_summary(reg);
    LatticeCriterion c = pg_lattice_criterion(g, bound);
    s["lattice"] = c.is_lattice;
    s["block_graph"] = c.is_block_graph;
    s["has_k4"] = c.has_k4;
    s["connected_sets"] = cat.size();
    a.lines.push_back("Clop=" + std::to_string(s["clop"].get<int>()) + " Reg=" +
                      std::to_string(s["reg"].get<int>()) + " lattice=" + yn(c.is_lattice));
    if (g.edges().empty())
      a.lines.push_back("no edges: the closure is the identity, so Clop = Reg = 2^" +
                        std::to_string(g.size()) + " subsets of the singletons");
    a.lines.push_back("block-graph=" + yn(c.is_block_graph) + " K4=" + yn(c.has_k4) +
                      " connected-sets=" + std::to_string(cat.size()));
    a.lines.push_back(flags_line(s));
    a.json = s;
    a.lattice = reg.lattice;
  } else if (kind == "semilattice") {
    JoinSemilattice sl = semilattice_input(input);
    RegLattice reg = enumerate_regular_closed(semilattice_closure_space(sl), bound);
    Json s = reg_summary(reg);
    a.lines.push_back("Clop=" + std::to_string(s["clop"].get<int>()) + " Reg=" +
                      std::to_string(s["reg"].get<int>()));
    ClopEquivalences eq = clop_lattice_equivalences(sl, bound);
    s["clop_lattice"] = eq.clop_is_lattice;
    a.lines.push_back("Clop-lattice=" + yn(eq.clop_is_lattice) +
                      (eq.witness.empty() ? "" : " (" + eq.witness + ")"));
    a.lines.push_back(flags_line(s));
    a.json = s;
    a.lattice = reg.lattice;
  } else if (kind == "points") {
    if (!is_file(input)) throw Error(ErrorCode::UnknownName, "points input must be a file");
    PointConfiguration E = io::points_from_json(load(input));
    a = analyze_space(conv_e_space(E), bound);
    auto sb = strongly_biconvex_sets(E);
    CjiConvexReport rep = cji_strongly_biconvex_check(E, bound);
    a.json["strongly_biconvex"] = sb.size();
    a.json["cji_check"] = rep.passed;
    a.lines.push_back("strongly-biconvex=" + std::to_string(sb.size()) + " CJI-check=" +
                      (rep.passed ? "pass" : "fail"));
  } else if (kind == "arrangement") {
    RegionCompletion rc = dm_of_region_poset(arrangement_input(input), bound);
    Json s = reg_summary(rc.reg);
    s["regions"] = rc.pos.eps.size();
    s["pos_lattice"] = rc.pos_is_lattice;
    s["dm_completion_of_pos"] = rc.is_dm_completion;
    a.lines.push_back("regions=" + std::to_string(rc.pos.eps.size()) + " Reg=" +
                      std::to_string(rc.reg.sets.size()) + " Pos-lattice=" + yn(rc.pos_is_lattice) +
                      " DM-completion-of-Pos=" + yn(rc.is_dm_completion));
    a.lines.push_back(flags_line(s));
    a.json = s;
    a.lattice = rc.reg.lattice;
  } else if (kind == "space") {
    a = analyze_space(is_file(input) ? io::space_from_json(load(input)) : spaces::by_name(input), bound);
  } else if (kind == "lattice") {
    FiniteLattice L = is_file(input) ? io::lattice_from_json(load(input)) : lattices::by_name(input);
    Json s;
    s["size"] = L.size();
    s["join_irreducibles"] = join_irreducibles(L).size();
    s["meet_irreducibles"] = meet_irreducibles(L).size();
    s["sd"] = semidistributivity(L).sd;
    Json rsd = Json::array();
    for (int m = 1; m <= 3; ++m) rsd.push_back(satisfies_rsd(L, m).holds);
    s["rsd"] = rsd;
    s["bounded"] = is_bounded(L).bounded;
    s["pseudocomplemented"] = is_pseudocomplemented(L);
    s["distributive"] = is_distributive(L);
    if (L.has_ortho()) s["ortho_valid"] = ortho_violations(L, *L.ortho_map()).empty();
    std::ostringstream os;
    os << "size=" << L.size() << " join-irreducibles=" << s["join_irreducibles"].get<int>()
       << " meet-irreducibles=" << s["meet_irreducibles"].get<int>();
    a.lines.push_back(os.str());
    a.lines.push_back("SD=" + yn(s["sd"]) + " RSD(1..3)=" + yn(rsd[0]) + "," + yn(rsd[1]) + "," +
                      yn(rsd[2]) + " bounded=" + yn(s["bounded"]) + " pseudocomplemented=" +
                      yn(s["pseudocomplemented"]) + " distributive=" + yn(s["distributive"]));
    a.json = s;
    a.lattice = L;
  } else {
    throw Usage("unknown kind \"" + kind + "\"");
  }
  return a;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular closed sets of finite closure spaces"};
  app.require_subcommand(1);

  std::string kind, input, format = "text", dot_path, json_path;
  int bound = kDefaultBound;
  auto* an = app.add_subcommand("analyze", "Counts and lattice properties of Reg for one input");
  an->add_option("kind", kind, "graph, semilattice, points, arrangement, space or lattice")
      ->required()
      ->check(CLI::IsMember({"graph", "semilattice", "points", "arrangement", "space", "lattice"}));
  an->add_option("input", input, "JSON file or built-in name (K4, star3, S4, braid4, m3-minus, M3, ...)")
      ->required();
  an->add_option("--bound", bound, "enumeration bound on the ground set")->check(CLI::Range(1, 128));
  an->add_option("--format", format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  an->add_option("--dot", dot_path, "also write the Hasse diagram of Reg");
  an->add_option("--json", json_path, "also write the lattice as JSON");

  verify::Options vo;
  bool timings = false;
  std::string vformat = "text";
  auto* pv = app.add_subcommand("paper-verify", "Run the reproduction claims");
  pv->add_option("--seed", vo.seed, "seed for the random sweeps");
  pv->add_option("--bound", vo.bound, "enumeration bound")->check(CLI::Range(1, 128));
  pv->add_option("--jobs", vo.jobs, "claims run in parallel")->check(CLI::Range(1, 256));
  pv->add_option("--filter", vo.filter, "run claims whose id contains this substring");
  pv->add_option("--format", vformat, "text or json")->check(CLI::IsMember({"text", "json"}));
  pv->add_flag("--timings", timings, "include runtimes in the report");
  auto* ls = app.add_subcommand("list", "List built-in inputs and claim ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*ls) {
      std::cout << "graphs: Kn Cn Pn En starN diamond K33_minus_e\n"
                << "semilattices: Sm psub\n"
                << "arrangements: linesN braidN\n"
                << "spaces:";
      for (const auto& n : spaces::names()) std::cout << " " << n;
      std::cout << "\nlattices:";
      for (const auto& n : lattices::names()) std::cout << " " << n;
      std::cout << "\nclaims:";
      for (const auto& n : verify::claim_ids()) std::cout << " " << n;
      std::cout << "\n";
      return 0;
    }
    if (*pv) {
      auto results = verify::run(vo);
      if (results.empty()) {
        std::cerr << "no claim matches \"" << vo.filter << "\"\n";
        return 2;
      }
      if (vformat == "json") std::cout << verify::to_json(results, vo, timings).dump(2) << "\n";
      else std::cout << verify::to_text(results, timings);
      bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
      return ok ? 0 : 1;
    }
    Analysis a = analyze(kind, input, bound);
    if (format == "json") {
      Json out = a.json;
      out["kind"] = kind;
      out["input"] = input;
      if (a.lattice) out["lattice_json"] = io::lattice_to_json(*a.lattice);
      std::cout << out.dump(2) << "\n";
    } else if (format == "dot") {
      std::cout << to_dot(*a.lattice, "Reg");
    } else {
      for (const auto& l : a.lines) std::cout << l << "\n";
    }
    if (!dot_path.empty()) write_file(dot_path, to_dot(*a.lattice, "Reg"));
    if (!json_path.empty()) write_file(json_path, io::lattice_to_json(*a.lattice).dump(2) + "\n");
    return 0;
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::GroundTooLarge)
      std::cerr << "hint: raise --bound, or use local operations (classification, minimal-neighborhood "
                   "checks) that work at any size\n";
    return e.code() == ErrorCode::ParseError || e.code() == ErrorCode::UnknownName ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
