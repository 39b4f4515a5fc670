#include <doctest.h>

#include "oracles.hpp"
#include "regcl/graph.hpp"

using namespace regcl;

namespace {

std::vector<Graph> graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k)
    for (const Graph& g : graphs::all_up_to_iso(k)) out.push_back(g);
  return out;
}

// Largest catalog member of a nonempty set, by vertex count.
VertexMask top_of(const ConnectedCatalog& cat, const ElementSet& a) {
  VertexMask h = 0;
  a.for_each([&](int i) { h |= cat.mask(i); });
  return h;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("graph construction") {
  CHECK_THROWS_AS(Graph(GroundSet({"a", "b"}), {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph(GroundSet({"a", "b"}), {{0, 2}}), Error);
  Graph g = Graph::from_labels({"x", "y", "z"}, {{"x", "y"}});
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(1, 2));
  std::vector<int> counts;
  for (int n = 0; n <= 5; ++n) counts.push_back(static_cast<int>(graphs::all_up_to_iso(n).size()));
  CHECK(counts == std::vector<int>{1, 1, 2, 4, 11, 34});
}

TEST_CASE("connected catalogs against brute force") {
  CHECK(connected_catalog(graphs::complete(3)).size() == 7);
  CHECK(connected_catalog(graphs::path(4)).size() == 10);
  for (const Graph& g : graphs_up_to(5)) {
    ConnectedCatalog cat = connected_catalog(g);
    std::vector<VertexMask> want = oracle::connected_sets(g);
    std::vector<VertexMask> got = cat.sets;
    std::sort(got.begin(), got.end());
    CHECK(got == want);
    for (int i = 0; i < cat.size(); ++i) CHECK(cat.find(cat.mask(i)) == i);
  }
  ConnectedCatalog k = connected_catalog(graphs::k33_minus_e());
  CHECK(k.find(parse_digits("02")) == -1);
  CHECK(k.find(parse_digits("04")) == -1);
}

TEST_CASE("disjoint-union closure against brute force") {
  Graph k2 = graphs::complete(2);
  ConnectedCatalog c2 = connected_catalog(k2);
  ClosureSpace s2 = graph_closure_space(c2);
  CHECK(s2.closure(s2.set_of({"a", "b"})) == s2.full());
  CHECK(enumerate_clopen(s2).size() == 6);
  CHECK(enumerate_clopen(graph_closure_space(connected_catalog(graphs::path(3)))).size() == 24);
  for (const Graph& g : graphs_up_to(4)) {
    ConnectedCatalog cat = connected_catalog(g);
    ClosureSpace s = graph_closure_space(cat);
    oracle::Table t = oracle::graph_table(cat);
    CHECK(enumerate_clopen(s) == oracle::clopen(t));
    CHECK(regular_closed_sets(s) == oracle::regular_closed(t));
    for (int p = 0; p < cat.size(); ++p) {
      CHECK(oracle::sorted(s.minimal_coverings(p)) == oracle::minimal_coverings(t, p));
      CHECK(oracle::sorted(connected_partitions(cat, cat.mask(p))) == oracle::minimal_coverings(t, p));
    }
  }
}

TEST_CASE("block graphs against forbidden induced subgraphs") {
  for (const Graph& g : graphs_up_to(6)) {
    CHECK(is_block_graph(g) == oracle::block_graph(g));
    CHECK(block_graph_by_forbidden_subgraphs(g) == oracle::block_graph(g));
    CHECK(has_k4(g) == oracle::has_induced(g, graphs::complete(4)));
  }
}

TEST_CASE("lattice criterion") {
  LatticeCriterion k4 = pg_lattice_criterion(graphs::complete(4));
  CHECK_FALSE(k4.is_lattice);
  CHECK(k4.has_k4);
  CHECK(k4.clop_is_lattice == std::optional<bool>(false));
  LatticeCriterion c4 = pg_lattice_criterion(graphs::cycle(4));
  CHECK_FALSE(c4.is_lattice);
  CHECK_FALSE(c4.is_block_graph);
  for (int n = 1; n <= 5; ++n) {
    CHECK(pg_lattice_criterion(graphs::path(n)).is_lattice);
    CHECK(pg_lattice_criterion(graphs::star(n - 1)).is_lattice);
  }
  for (const Graph& g : graphs_up_to(4)) {
    LatticeCriterion c = pg_lattice_criterion(g);
    REQUIRE(c.clop_is_lattice.has_value());
    CHECK(*c.clop_is_lattice == c.is_lattice);
    CHECK(*c.clop_equals_reg == c.is_lattice);
    if (!c.is_lattice) CHECK_FALSE(c.witness.empty());
  }
}

TEST_CASE("cuts and components") {
  ConnectedCatalog p3 = connected_catalog(graphs::path(3));
  std::vector<VertexMask> cs = cuts(p3, 0b111);
  std::sort(cs.begin(), cs.end());
  CHECK(cs == std::vector<VertexMask>{0b001, 0b011, 0b100, 0b110, 0b111});
  ConnectedCatalog k4 = connected_catalog(graphs::complete(4));
  CHECK(cuts(k4, 0b1111).size() == 15);
  ConnectedCatalog k = connected_catalog(graphs::k33_minus_e());
  VertexMask h = parse_digits("012345");
  std::vector<VertexMask> co = coco(k, parse_digits("12"), h);
  VertexMask u = 0;
  for (VertexMask c : co) {
    CHECK(k.graph.connected(c));
    u |= c;
    for (VertexMask d : co)
      if (d != c) CHECK_FALSE(k.graph.touches(c, d));
  }
  CHECK(u == parse_digits("0345"));
  for (const Graph& g : graphs_up_to(5)) {
    ConnectedCatalog cat = connected_catalog(g);
    for (VertexMask hh : cat.sets)
      for (VertexMask c : cuts(cat, hh)) {
        CHECK(g.connected(c));
        CHECK(g.connected(hh & ~c));
      }
  }
}

TEST_CASE("pseudo-ultrafilters against brute force") {
  ConnectedCatalog k1 = connected_catalog(graphs::complete(1));
  auto one = pseudo_ultrafilters(k1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].members == std::vector<VertexMask>{1});
  CHECK(j_of_mu(k1, one[0]) == ElementSet{k1.find(1)});
  CHECK(pseudo_ultrafilters(connected_catalog(graphs::complete(2)), 0b11).size() == 2);
  CHECK(pseudo_ultrafilters(connected_catalog(graphs::complete(3)), 0b111).size() == 6);
  for (const Graph& g : graphs_up_to(5)) {
    ConnectedCatalog cat = connected_catalog(g);
    for (VertexMask h : cat.sets) {
      auto mus = pseudo_ultrafilters(cat, h);
      if (cuts(cat, h).size() <= 18) CHECK(static_cast<int>(mus.size()) == oracle::count_pseudo_ultrafilters(g, h));
      std::set<std::vector<VertexMask>> seen;
      for (const auto& mu : mus) seen.insert(mu.members);
      for (const auto& mu : mus) {
        CHECK(is_pseudo_ultrafilter(cat, mu));
        CHECK(mu.contains(h));
        CHECK(seen.count(conjugate(cat, mu).members) == 1);
      }
    }
  }
}

TEST_CASE("join-irreducibles of R(G) come from pseudo-ultrafilters") {
  for (const Graph& g : graphs_up_to(4)) {
    ConnectedCatalog cat = connected_catalog(g);
    ClosureSpace s = graph_closure_space(cat);
    RegLattice reg = enumerate_regular_closed(s);
    std::set<std::uint64_t> ji;
    for (int i : join_irreducibles(reg.lattice)) {
      const ElementSet& a = reg.sets[i];
      ji.insert(oracle::mask_of(a));
      VertexMask h = top_of(cat, a);
      REQUIRE(cat.find(h) >= 0);
      CHECK(a.subset_of(cat.below(h)));
      PseudoUltrafilter mu{h, {}};
      ElementSet trace;
      for (VertexMask c : cuts(cat, h))
        if (a.contains(cat.find(c))) {
          mu.members.push_back(c);
          trace |= ElementSet{cat.find(c)};
        }
      std::sort(mu.members.begin(), mu.members.end());
      CHECK(trace.subset_of(s.interior(a)));
      CHECK(is_pseudo_ultrafilter(cat, mu));
      CHECK(s.closure(j_of_mu(cat, mu)) == a);
      // Unique lower cover drops exactly the top.
      ElementSet lower = reg.sets[reg.lattice.lower_covers(i)[0]];
      CHECK(lower == (a - ElementSet{cat.find(h)}));
    }
    std::set<std::uint64_t> from_mu;
    for (const CjiEntry& e : cji_from_pseudo_ultrafilters(cat)) {
      CHECK(e.closure == s.closure(e.j));
      from_mu.insert(oracle::mask_of(e.closure));
    }
    CHECK(from_mu == ji);
    CHECK(is_bounded(reg.lattice).bounded);
    CHECK(is_tight(reg.lattice, reg.clopen_indices()).tight);
  }
}

TEST_CASE("the K4 join-irreducible listed for the complete graph") {
  ConnectedCatalog cat = connected_catalog(graphs::complete(4));
  ElementSet target = cat.ground.set_of({"b", "c", "ab", "ac", "bc", "abc", "bcd", "abcd"});
  bool found = false;
  for (const CjiEntry& e : cji_from_pseudo_ultrafilters(cat)) found = found || e.closure == target;
  CHECK(found);
  RegLattice reg = enumerate_regular_closed(graph_closure_space(cat), 64);
  int i = reg.index_of(target);
  REQUIRE(i >= 0);
  CHECK(reg.lattice.lower_covers(i).size() == 1);
}

TEST_CASE("K2 join-irreducibles are the four benzene ones") {
  ConnectedCatalog cat = connected_catalog(graphs::complete(2));
  RegLattice reg = enumerate_regular_closed(graph_closure_space(cat));
  CHECK(is_isomorphic(reg.lattice, lattices::benzene()));
  CHECK(cji_from_pseudo_ultrafilters(cat).size() == 4);
}

TEST_CASE("contractible diamonds") {
  auto w = find_contractible_diamond(graphs::diamond());
  REQUIRE(w.has_value());
  CHECK(__builtin_popcount(w->x | w->y | w->u | w->v) == 4);
  CHECK(diamond_contractible_free(graphs::cycle(5)));
  for (const Graph& g : graphs_up_to(5)) {
    bool free = diamond_contractible_free(g);
    if (is_block_graph(g)) CHECK(free);
    if (auto d = find_contractible_diamond(g)) {
      CHECK((d->x & d->y) == 0);
      CHECK(g.touches(d->x, d->y));
      CHECK(g.touches(d->x, d->u));
      CHECK(g.touches(d->x, d->v));
      CHECK(g.touches(d->y, d->u));
      CHECK(g.touches(d->y, d->v));
      CHECK_FALSE(g.touches(d->u, d->v));
      CHECK(((d->u | d->v) & (d->x | d->y)) == 0);
      CHECK((d->u & d->v) == 0);
    }
    if (!free) continue;
    ConnectedCatalog cat = connected_catalog(g);
    ClosureSpace s = graph_closure_space(cat);
    for (const CjiEntry& e : cji_from_pseudo_ultrafilters(cat)) CHECK(classify(s, e.j).clopen);
  }
}

TEST_CASE("an open set of P(K3) that is not a union of clopens") {
  ConnectedCatalog cat = connected_catalog(graphs::complete(3));
  ClosureSpace s = graph_closure_space(cat);
  ElementSet u = cat.ground.set_of({"a", "b", "c", "abc"});
  CHECK(classify(s, u).open);
  ElementSet covered;
  for (const ElementSet& c : enumerate_clopen(s))
    if (c.subset_of(u)) covered |= c;
  CHECK(covered != u);
}

TEST_CASE("K33-e certificate") {
  CHECK(k33e_v().size() == 24);
  Certificate c = certify_k33e();
  for (const Check& ch : c.checks) CHECK_MESSAGE(ch.passed, ch.name << ": " << ch.detail);
  CHECK(c.all_passed());
  CHECK_FALSE(c.checksum.empty());
  CHECK(c.checksum == table_checksum(k33e_v()));
}

TEST_CASE("K7 certificate") {
  CHECK(k7_u().size() == 64);
  std::vector<VertexMask> u = k7_u();
  auto in = [&](const char* s) { return std::count(u.begin(), u.end(), parse_digits(s)) > 0; };
  CHECK(in("012"));
  CHECK(in("34"));
  CHECK_FALSE(in("01234"));
  CHECK(in("0"));
  CHECK_FALSE(in("123456"));
  Certificate c = certify_k7();
  for (const Check& ch : c.checks) CHECK_MESSAGE(ch.passed, ch.name << ": " << ch.detail);
  CHECK(c.all_passed());
}

TEST_CASE("catalog limits") {
  CHECK_THROWS_AS(connected_catalog(graphs::complete(8)), Error);
  try {
    connected_catalog(graphs::complete(8));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooManyVertices);
  }
}

}  // TEST_SUITE
