#include "regcl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "regcl/convex.hpp"
#include "regcl/graph.hpp"
#include "regcl/lattice.hpp"
#include "regcl/semilattice.hpp"
#include "regcl/spaces.hpp"

namespace regcl::verify {

namespace {

struct Claim {
  const char* id;
  const char* description;
  double time_limit;
  std::function<void(const Options&, ClaimResult&)> body;
};

int count_clopen(const RegLattice& reg) {
  return static_cast<int>(std::count(reg.clopen.begin(), reg.clopen.end(), true));
}

std::vector<ElementSet> clopen_sets(const RegLattice& reg) {
  std::vector<ElementSet> out;
  for (size_t i = 0; i < reg.sets.size(); ++i)
    if (reg.clopen[i]) out.push_back(reg.sets[i]);
  return out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

RegLattice graph_reg(const Graph& g, int bound, ClosureSpace* out = nullptr) {
  ConnectedCatalog cat = connected_catalog(g);
  ClosureSpace space = graph_closure_space(cat);
  RegLattice reg = enumerate_regular_closed(space, bound);
  if (out) *out = space;
  return reg;
}

bool is_cycle_graph(const Graph& g) {
  if (g.size() < 3 || !g.connected(g.all())) return false;
  for (int v = 0; v < g.size(); ++v)
    if (std::popcount(g.neighbors(v)) != 2) return false;
  return true;
}

void s4_counts(const Options& o, ClaimResult& r) {
  RegLattice reg = enumerate_regular_closed(semilattice_closure_space(generate_sm(4)), o.bound);
  int c = count_clopen(reg);
  r.expected = "Reg=162 Clop=150";
  r.computed = "Reg=" + std::to_string(reg.sets.size()) + " Clop=" + std::to_string(c);
  r.passed = reg.sets.size() == 162 && c == 150;
}

void k4_counts(const Options& o, ClaimResult& r) {
  ClosureSpace space;
  RegLattice reg = graph_reg(graphs::complete(4), o.bound, &space);
  int c = count_clopen(reg);
  auto ji = join_irreducibles(reg.lattice);
  bool all_clopen = std::all_of(ji.begin(), ji.end(), [&](int i) { return reg.clopen[i]; });
  ElementSet target = space.set_of({"b", "c", "ab", "ac", "bc", "abc", "bcd", "abcd"});
  int t = reg.index_of(target);
  bool found = t >= 0 && std::find(ji.begin(), ji.end(), t) != ji.end();
  r.expected = "Clop=370 Reg=382, every join-irreducible clopen, " + space.format(target) +
               " join-irreducible";
  r.computed = "Clop=" + std::to_string(c) + " Reg=" + std::to_string(reg.sets.size()) + ", " +
               std::to_string(ji.size()) + " join-irreducibles, all clopen: " + yes(all_clopen) +
               ", target found: " + yes(found);
  r.passed = c == 370 && reg.sets.size() == 382 && all_clopen && found;
}

void small_permutohedra(const Options& o, ClaimResult& r) {
  FiniteLattice benzene = lattices::benzene();
  RegLattice k2 = graph_reg(graphs::complete(2), o.bound);
  auto k2c = clopen_sets(k2);
  bool k2iso = is_isomorphic(FiniteLattice::from_sets(k2c), benzene);
  RegLattice s2 = enumerate_regular_closed(semilattice_closure_space(generate_sm(2)), o.bound);
  auto s2c = clopen_sets(s2);
  bool s2iso = is_isomorphic(FiniteLattice::from_sets(s2c), benzene);
  RegLattice p3 = graph_reg(graphs::path(3), o.bound);
  auto p3c = clopen_sets(p3);
  RegionPoset weak = region_poset(braid_arrangement(4));
  bool p3iso = is_isomorphic(FiniteLattice::from_sets(p3c), FiniteLattice::from_sets(weak.eps));
  r.expected = "P(K2)=6 ≅ benzene, Clop S2=6 ≅ benzene, P(P3)=24 ≅ weak order on 4 letters";
  std::ostringstream os;
  os << "P(K2)=" << k2c.size() << (k2iso ? " ≅" : " ≇") << " benzene, Clop S2=" << s2c.size()
     << (s2iso ? " ≅" : " ≇") << " benzene, P(P3)=" << p3c.size() << (p3iso ? " ≅" : " ≇")
     << " weak order (" << weak.eps.size() << " regions)";
  r.computed = os.str();
  r.passed = k2c.size() == 6 && k2iso && s2c.size() == 6 && s2iso && p3c.size() == 24 && p3iso;
}

void star3_count(const Options& o, ClaimResult& r) {
  RegLattice reg = graph_reg(graphs::star(3), o.bound);
  int c = count_clopen(reg);
  r.expected = "P(star3)=160";
  r.computed = "P(star3)=" + std::to_string(c) + " R(star3)=" + std::to_string(reg.sets.size());
  r.passed = c == 160;
}

// Indices of the given sets in reg; -1 entries mark absent sets.
std::vector<int> indices(const RegLattice& reg, const std::vector<ElementSet>& sets) {
  std::vector<int> out;
  for (const auto& s : sets) out.push_back(reg.index_of(s));
  return out;
}

bool sublattice_iso(const FiniteLattice& L, const std::vector<int>& gens, const FiniteLattice& pattern,
                    bool gens_are_atoms) {
  if (std::find(gens.begin(), gens.end(), -1) != gens.end()) return false;
  auto elems = generated_sublattice(L, gens);
  FiniteLattice sub = induced(L, elems);
  if (!is_isomorphic(sub, pattern)) return false;
  if (!gens_are_atoms) return true;
  std::vector<int> atoms;
  for (int a : sub.upper_covers(sub.bottom())) atoms.push_back(elems[a]);
  std::vector<int> g = gens;
  std::sort(g.begin(), g.end());
  std::sort(atoms.begin(), atoms.end());
  return g == atoms;
}

void rsd1_space(const Options& o, ClaimResult& r) {
  ClosureSpace sp = spaces::rsd1_failure();
  auto closed = enumerate_closed(sp, o.bound);
  RegLattice reg = enumerate_regular_closed(sp, o.bound);
  bool all_clopen = count_clopen(reg) == static_cast<int>(reg.sets.size());
  RsdResult rsd = satisfies_rsd(reg.lattice, 1);
  const FiniteLattice& L = reg.lattice;
  auto g = indices(reg, {sp.set_of({"a", "d", "e"}), sp.set_of({"b", "d", "e"}), sp.set_of({"c", "d"})});
  bool l4 = sublattice_iso(L, g, lattices::l4(), false);
  if (l4) {
    int d = reg.index_of(sp.set_of({"d"})), top5 = reg.index_of(sp.set_of({"a", "b", "c", "d", "e"}));
    l4 = L.meet(g[0], g[1]) == d && L.join(g[0], g[2]) == top5 && L.join(g[1], g[2]) == top5 &&
         L.meet(L.join(g[0], g[1]), g[2]) == d;
  }
  auto h = indices(reg, {sp.set_of({"c", "u"}), sp.set_of({"d", "u"}), sp.set_of({"e", "u"})});
  bool l1 = sublattice_iso(L, h, lattices::l1(), true);
  bool cg = is_convex_geometry(sp, o.bound);
  r.expected = "51 closed, 40 regular closed all clopen, RSD(1) fails, L4 on a0,a1,c, L1 on {c,u},{d,u},{e,u}, convex geometry";
  std::ostringstream os;
  os << closed.size() << " closed, " << reg.sets.size() << " regular closed"
     << (all_clopen ? " all clopen" : " not all clopen") << ", RSD(1) "
     << (rsd.holds ? "holds" : "fails") << ", L4 copy " << yes(l4) << ", L1 copy " << yes(l1)
     << ", convex geometry " << yes(cg);
  r.computed = os.str();
  r.passed = closed.size() == 51 && reg.sets.size() == 40 && all_clopen && !rsd.holds && l4 && l1 && cg;
}

void m3_minus(const Options& o, ClaimResult& r) {
  ClosureSpace sp = spaces::m3_minus();
  RegLattice reg = enumerate_regular_closed(sp, o.bound);
  bool eq = count_clopen(reg) == static_cast<int>(reg.sets.size());
  SdReport sd = semidistributivity(reg.lattice);
  const FiniteLattice& L = reg.lattice;
  int ab = reg.index_of(sp.set_of({"a", "b"})), bc = reg.index_of(sp.set_of({"b", "c"}));
  int b1 = reg.index_of(sp.set_of({"1", "b"})), b = reg.index_of(sp.set_of({"b"}));
  bool witness = ab >= 0 && bc >= 0 && b1 >= 0 && b >= 0 && L.meet(ab, b1) == b &&
                 L.meet(bc, b1) == b && L.meet(L.join(ab, bc), b1) == b1;
  r.expected = "Reg=Clop, not semidistributive: ab∧1b = bc∧1b = b, (ab∨bc)∧1b = 1b";
  r.computed = "Reg=" + std::to_string(reg.sets.size()) + " Clop=" + std::to_string(count_clopen(reg)) +
               ", semidistributive " + yes(sd.sd) + ", witness holds " + yes(witness);
  r.passed = eq && !sd.sd && witness;
}

void nonopen_ji(const Options& o, ClaimResult& r) {
  ClosureSpace sp = spaces::nonopen_ji();
  RegLattice reg = enumerate_regular_closed(sp, o.bound);
  ElementSet a = sp.set_of({"p", "p0", "p1", "q"});
  ElementSet lower = sp.set_of({"p0", "p1", "q"});
  Classification c = classify(sp, a);
  int i = reg.index_of(a);
  auto ji = join_irreducibles(reg.lattice);
  bool is_ji = i >= 0 && std::find(ji.begin(), ji.end(), i) != ji.end();
  bool cover_ok = is_ji && reg.sets[reg.lattice.lower_covers(i).at(0)] == lower;
  bool clop_lattice = true;
  try {
    FiniteLattice::from_sets(clopen_sets(reg));
  } catch (const Error&) {
    clop_lattice = false;
  }
  r.expected = sp.format(a) + " regular closed, join-irreducible with lower cover " + sp.format(lower) +
               ", not open; Clop not a lattice";
  r.computed = "regular closed " + yes(c.regular_closed) + ", join-irreducible " + yes(is_ji) +
               ", lower cover matches " + yes(cover_ok) + ", open " + yes(c.open) +
               ", Clop lattice " + yes(clop_lattice);
  r.passed = c.regular_closed && is_ji && cover_ok && !c.open && !clop_lattice;
}

void certificate(const Certificate& cert, ClaimResult& r) {
  int ok = 0;
  std::string failed;
  for (const auto& c : cert.checks) {
    if (c.passed) ++ok;
    else failed += (failed.empty() ? "" : "; ") + c.name + ": " + c.detail;
  }
  r.expected = "all " + std::to_string(cert.checks.size()) + " checks pass";
  r.computed = std::to_string(ok) + "/" + std::to_string(cert.checks.size()) + " checks pass" +
               (failed.empty() ? "" : " (" + failed + ")");
  r.passed = cert.all_passed();
}

void property_sweep(const Options& o, ClaimResult& r) {
  int instances = 0, failures = 0;
  std::string first;
  auto check = [&](bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (first.empty()) first = what;
  };
  auto common = [&](const RegLattice& reg, const std::string& name) {
    Boundedness b = is_bounded(reg.lattice);
    check(b.bounded, name + ": Reg not bounded");
    auto ci = reg.clopen_indices();
    check(is_tight(reg.lattice, ci).tight, name + ": Clop not tight");
    for (int m = 1; m <= 3; ++m)
      check(satisfies_rsd(reg.lattice, m).holds, name + ": RSD(" + std::to_string(m) + ") fails");
  };
  auto ji_sets = [](const RegLattice& reg) {
    std::vector<ElementSet> out;
    for (int i : join_irreducibles(reg.lattice)) out.push_back(reg.sets[i]);
    std::sort(out.begin(), out.end());
    return out;
  };
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : graphs::all_up_to_iso(n)) {
      ++instances;
      ConnectedCatalog cat = connected_catalog(g);
      ClosureSpace space = graph_closure_space(cat);
      RegLattice reg = enumerate_regular_closed(space, o.bound);
      std::string name = "graph " + std::to_string(n) + ":" + std::to_string(g.edges().size());
      for (auto [u, v] : g.edges()) name += " " + g.vertices().label(u) + g.vertices().label(v);
      common(reg, name);
      if (is_block_graph(g) || is_cycle_graph(g))
        check(is_dm_completion(reg.lattice, reg.clopen_indices()), name + ": Reg not the DM completion");
      std::vector<ElementSet> via_mu;
      for (const auto& e : cji_from_pseudo_ultrafilters(cat)) via_mu.push_back(e.closure);
      std::sort(via_mu.begin(), via_mu.end());
      check(via_mu == ji_sets(reg), name + ": pseudo-ultrafilter classification differs");
    }
  for (int i = 0; i < 200; ++i) {
    ++instances;
    std::uint64_t seed = o.seed * 1000003u + static_cast<std::uint64_t>(i);
    JoinSemilattice s = random_semilattice(seed, 7);
    RegLattice reg = enumerate_regular_closed(semilattice_closure_space(s), o.bound);
    std::string name = "semilattice seed " + std::to_string(seed);
    common(reg, name);
    check(is_dm_completion(reg.lattice, reg.clopen_indices()), name + ": Reg not the DM completion");
    check(semilattice_cji(s) == ji_sets(reg), name + ": ideal classification differs");
    check(clop_lattice_equivalences(s, o.bound).agree(), name + ": Clop equivalences disagree");
    for (int p = 0; p < s.size(); ++p)
      for (int m = 1; m <= 3; ++m)
        check(lower_cover_criteria(s, p, m).agree(), name + ": lower-cover criteria disagree");
  }
  r.expected = "zero failures over at least 200 instances";
  r.computed = std::to_string(failures) + " failures over " + std::to_string(instances) + " instances" +
               (first.empty() ? "" : " (first: " + first + ")");
  r.passed = failures == 0 && instances >= 200;
}

void lattice_criterion(const Options& o, ClaimResult& r) {
  int classes = 0, lattices = 0, discrepancies = 0;
  std::string first;
  for (int n = 0; n <= 5; ++n)
    for (const Graph& g : graphs::all_up_to_iso(n)) {
      ++classes;
      LatticeCriterion c = pg_lattice_criterion(g, std::max(o.bound, 31));
      bool ok = c.clop_is_lattice.has_value() && c.clop_equals_reg.has_value() &&
                *c.clop_is_lattice == c.is_lattice && *c.clop_equals_reg == c.is_lattice &&
                c.is_block_graph == block_graph_by_forbidden_subgraphs(g);
      if (c.is_lattice) ++lattices;
      if (!ok) {
        ++discrepancies;
        if (first.empty()) first = std::to_string(n) + " vertices, " + std::to_string(g.edges().size()) +
                                   " edges: " + c.witness;
      }
    }
  r.expected = "zero discrepancies";
  r.computed = std::to_string(discrepancies) + " discrepancies over " + std::to_string(classes) +
               " classes (" + std::to_string(lattices) + " lattices)" +
               (first.empty() ? "" : " (first: " + first + ")");
  r.passed = discrepancies == 0;
}

void convex_sweep(const Options& o, ClaimResult& r) {
  int failures = 0, configs = 0;
  std::string first;
  auto check = [&](bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (first.empty()) first = what;
  };
  for (int i = 0; i < 50; ++i) {
    ++configs;
    std::uint64_t seed = o.seed * 7919u + static_cast<std::uint64_t>(i);
    PointConfiguration E = random_configuration(seed, 6);
    std::string name = "configuration seed " + std::to_string(seed);
    ClosureSpace sp = conv_e_space(E);
    RegLattice reg = enumerate_regular_closed(sp, o.bound);
    std::vector<int> K;
    for (const auto& x : strongly_biconvex_sets(E)) K.push_back(reg.index_of(x));
    bool in = std::find(K.begin(), K.end(), -1) == K.end();
    check(in && is_dm_completion(reg.lattice, K), name + ": Reg not the DM completion of Clop*");
    check(is_pseudocomplemented(reg.lattice), name + ": Reg not pseudocomplemented");
    CjiConvexReport rep = cji_strongly_biconvex_check(E, o.bound);
    check(rep.passed, name + ": " + (rep.failures.empty() ? "" : rep.failures[0]));
  }
  RegionPoset three = region_poset(lines_arrangement({Rational(0), Rational(1), Rational(-1)}));
  bool benz = three.eps.size() == 6 && is_isomorphic(FiniteLattice::from_sets(three.eps), lattices::benzene());
  check(benz, "three lines do not give the benzene");
  r.expected = "zero failures over 50 configurations; three lines give the benzene";
  r.computed = std::to_string(failures) + " failures over " + std::to_string(configs) +
               " configurations; three lines: " + std::to_string(three.eps.size()) + " regions" +
               (benz ? " ≅ benzene" : "") + (first.empty() ? "" : " (first: " + first + ")");
  r.passed = failures == 0;
}

void orthoposet_space_claim(const Options& o, ClaimResult& r) {
  std::vector<std::pair<std::string, FiniteLattice>> inputs{
      {"B2", lattices::two_atom_boolean()}, {"benzene", lattices::benzene()}, {"M4", lattices::m4()}};
  std::string out;
  bool all = true;
  for (const auto& [name, L] : inputs) {
    OrthoposetSpace ms = orthoposet_space(L);
    RegLattice reg = enumerate_regular_closed(ms.space, o.bound);
    std::vector<int> img;
    bool ok = true;
    for (int p = 0; p < L.size(); ++p) {
      int i = reg.index_of(ms.z[p]);
      ok = ok && i >= 0 && reg.clopen[i];
      img.push_back(i);
    }
    auto ci = reg.clopen_indices();
    std::vector<int> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    ok = ok && sorted == ci && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    for (int p = 0; ok && p < L.size(); ++p)
      for (int q = 0; q < L.size(); ++q) ok = ok && L.leq(p, q) == ms.z[p].subset_of(ms.z[q]);
    for (int p = 0; ok && p < L.size(); ++p) ok = reg.lattice.ortho(img[p]) == img[L.ortho(p)];
    bool dm = ok && is_dm_completion(reg.lattice, ci);
    out += (out.empty() ? "" : ", ") + name + ": Clop " + (ok ? "≅" : "≇") + " input, Reg " +
           (dm ? "is" : "is not") + " its DM completion";
    all = all && ok && dm;
  }
  r.expected = "for B2, benzene, M4: Clop ≅ input orthoposet and Reg its DM completion";
  r.computed = out;
  r.passed = all;
}

void clop_gap(const Options& o, ClaimResult& r) {
  ClosureSpace sp = spaces::poset_clop_gap();
  RegLattice reg = enumerate_regular_closed(sp, o.bound);
  int c = count_clopen(reg);
  ElementSet a0 = sp.set_of({"a0"}), a1 = sp.set_of({"a1"});
  int i0 = reg.index_of(a0), i1 = reg.index_of(a1);
  std::string reg_join = "none", clop_join = "none";
  bool differ = false;
  if (i0 >= 0 && i1 >= 0) {
    ElementSet rj = reg.sets[reg.lattice.join(i0, i1)];
    reg_join = sp.format(rj);
    std::vector<int> ub;
    for (int k : reg.clopen_indices())
      if (reg.lattice.leq(i0, k) && reg.lattice.leq(i1, k)) ub.push_back(k);
    for (int k : ub)
      if (std::all_of(ub.begin(), ub.end(), [&](int m) { return reg.lattice.leq(k, m); }))
        clop_join = sp.format(reg.sets[k]);
    differ = clop_join != reg_join;
  }
  r.expected = "Reg=8 Clop=6, {a0}∨{a1} differs between Clop and Reg";
  r.computed = "Reg=" + std::to_string(reg.sets.size()) + " Clop=" + std::to_string(c) +
               ", join in Reg " + reg_join + ", join in Clop " + clop_join;
  r.passed = reg.sets.size() == 8 && c == 6 && differ;
}

const std::vector<Claim>& claims() {
  static const std::vector<Claim> all{
      {"s4-counts", "regular closed and clopen subsets of S4", 10, s4_counts},
      {"k4-counts", "permutohedron and extended permutohedron of K4", 30, k4_counts},
      {"small-permutohedra", "small permutohedra against the benzene and the weak order", 30,
       small_permutohedra},
      {"star3-count", "permutohedron of the star with three leaves", 10, star3_count},
      {"rsd1-failure", "six-point convex geometry whose Reg fails RSD(1)", 30, rsd1_space},
      {"m3-minus", "M3 minus its bottom: Reg equals Clop and is not semidistributive", 10, m3_minus},
      {"nonopen-ji", "a join-irreducible regular closed set that is not open", 10, nonopen_ji},
      {"k33e", "certificate for K3,3 minus an edge", 5,
       [](const Options&, ClaimResult& r) { certificate(certify_k33e(), r); }},
      {"k7", "certificate for K7", 30, [](const Options&, ClaimResult& r) { certificate(certify_k7(), r); }},
      {"property-sweep", "boundedness, tightness, completions, RSD and join-irreducible classifications", 300,
       property_sweep},
      {"lattice-criterion", "lattice criterion for permutohedra of graphs on at most five vertices", 300,
       lattice_criterion},
      {"convex-sweep", "random planar configurations and the three-line arrangement", 60, convex_sweep},
      {"orthoposet-space", "orthoposets recovered as clopen sets", 30, orthoposet_space_claim},
      {"poset-clop-gap", "Clop is not a sublattice of Reg for a poset-type space", 10, clop_gap},
  };
  return all;
}

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> out;
  for (const auto& c : claims()) out.push_back(c.id);
  return out;
}

std::vector<ClaimResult> run(const Options& opt) {
  std::vector<const Claim*> todo;
  for (const auto& c : claims())
    if (opt.filter.empty() || std::string(c.id).find(opt.filter) != std::string::npos) todo.push_back(&c);
  std::vector<ClaimResult> results(todo.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k; (k = next++) < todo.size();) {
      const Claim& c = *todo[k];
      ClaimResult& r = results[k];
      r.id = c.id;
      r.description = c.description;
      r.time_limit = c.time_limit;
      auto t0 = std::chrono::steady_clock::now();
      try {
        c.body(opt, r);
      } catch (const std::exception& e) {
        r.passed = false;
        r.computed = std::string("error: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(todo.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::string to_text(const std::vector<ClaimResult>& results, bool timings) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& r : results) {
    passed += r.passed;
    os << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.computed;
    if (timings) os << " [" << r.seconds << " s]";
    os << "\n";
    if (!r.passed) os << "     expected: " << r.expected << "\n";
  }
  os << passed << "/" << results.size() << " claims pass\n";
  return os.str();
}

nlohmann::json to_json(const std::vector<ClaimResult>& results, const Options& opt, bool timings) {
  nlohmann::json j;
  j["seed"] = opt.seed;
  j["bound"] = opt.bound;
  auto& arr = j["claims"] = nlohmann::json::array();
  int passed = 0;
  for (const auto& r : results) {
    nlohmann::json e{{"id", r.id},
                     {"description", r.description},
                     {"expected", r.expected},
                     {"computed", r.computed},
                     {"passed", r.passed}};
    if (timings) e["seconds"] = r.seconds;
    arr.push_back(e);
    passed += r.passed;
  }
  j["passed"] = passed;
  j["failed"] = static_cast<int>(results.size()) - passed;
  return j;
}

}  // namespace regcl::verify
