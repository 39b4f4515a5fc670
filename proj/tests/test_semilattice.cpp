#include <doctest.h>

#include "oracles.hpp"
#include "regcl/semilattice.hpp"

using namespace regcl;

namespace {

std::vector<JoinSemilattice> sample(std::uint64_t first, int count, int max_size) {
  std::vector<JoinSemilattice> out;
  for (int i = 0; i < count; ++i) out.push_back(random_semilattice(first + i, max_size));
  out.push_back(generate_sm(1));
  out.push_back(generate_sm(2));
  out.push_back(generate_sm(3));
  out.push_back(psub_srs());
  return out;
}

// Largest element of a nonempty set closed downward in S below its join.
int max_of(const JoinSemilattice& s, const ElementSet& a) { return s.join_of(a); }

}  // namespace

TEST_SUITE("semilattice") {

TEST_CASE("construction") {
  CHECK(generate_sm(2).size() == 3);
  CHECK(generate_sm(3).size() == 7);
  CHECK(generate_sm(4).size() == 15);
  JoinSemilattice s3 = generate_sm(3);
  int a = s3.ground().index("a"), bc = s3.ground().index("bc");
  CHECK(s3.join(a, bc) == s3.ground().index("abc"));
  JoinSemilattice t = JoinSemilattice::from_join_table(s3.ground(), s3.join_table());
  for (int x = 0; x < 7; ++x)
    for (int y = 0; y < 7; ++y) CHECK(t.leq(x, y) == s3.leq(x, y));
  // Two maximal elements: no join.
  CHECK_THROWS_AS(JoinSemilattice::from_order(GroundSet({"x", "y"}), Order::antichain(2)), Error);
  std::vector<std::vector<int>> bad = {{0, 0}, {1, 1}};
  CHECK_THROWS_AS(JoinSemilattice::from_join_table(GroundSet({"x", "y"}), bad), Error);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    JoinSemilattice r = random_semilattice(seed, 8);
    CHECK(r.size() >= 1);
    CHECK(r.size() <= 8);
    for (int x = 0; x < r.size(); ++x)
      for (int y = 0; y < r.size(); ++y) {
        int j = r.join(x, y);
        CHECK(r.leq(x, j));
        CHECK(r.leq(y, j));
        for (int z = 0; z < r.size(); ++z)
          if (r.leq(x, z) && r.leq(y, z)) CHECK(r.leq(j, z));
      }
  }
}

TEST_CASE("small Reg and Clop") {
  RegLattice r1 = enumerate_regular_closed(semilattice_closure_space(generate_sm(1)));
  CHECK(r1.sets.size() == 2);
  RegLattice r2 = enumerate_regular_closed(semilattice_closure_space(generate_sm(2)));
  CHECK(is_isomorphic(r2.lattice, lattices::benzene()));
  ClosureSpace s3 = semilattice_closure_space(generate_sm(3));
  RegLattice r3 = enumerate_regular_closed(s3);
  CHECK(r3.clopen_indices().size() == r3.sets.size());
  CHECK(enumerate_clopen(s3).size() == 26);
  ClosureSpace s4 = semilattice_closure_space(generate_sm(4));
  RegLattice r4 = enumerate_regular_closed(s4);
  CHECK(r4.sets.size() == 162);
  CHECK(enumerate_clopen(s4).size() == 150);
  for (int i : join_irreducibles(r4.lattice)) CHECK(r4.clopen[i]);
}

TEST_CASE("ideals against brute force") {
  for (const JoinSemilattice& s : sample(0, 80, 8)) {
    CHECK(oracle::sorted(ideals(s)) == oracle::ideals(s));
    for (const ElementSet& x : oracle::ideals(s)) CHECK(is_ideal(s, x));
  }
}

TEST_CASE("maximal proper ideals examples") {
  JoinSemilattice s2 = generate_sm(2);
  auto m = oracle::sorted(maximal_proper_ideals_below(s2, s2.ground().index("ab")));
  CHECK(m == oracle::sorted({s2.ground().set_of({"a"}), s2.ground().set_of({"b"})}));
  JoinSemilattice s3 = generate_sm(3);
  auto m3 = maximal_proper_ideals_below(s3, s3.ground().index("abc"));
  CHECK(std::count(m3.begin(), m3.end(), s3.ground().set_of({"a", "c", "ac"})) == 1);
  for (const char* atom : {"a", "b", "c"}) {
    auto e = maximal_proper_ideals_below(s3, s3.ground().index(atom));
    CHECK(e == std::vector<ElementSet>{ElementSet{}});
  }
  for (const JoinSemilattice& s : sample(100, 40, 8)) {
    auto all = oracle::ideals(s);
    for (int p = 0; p < s.size(); ++p) {
      ElementSet dp = s.down(p);
      std::vector<ElementSet> want;
      for (const ElementSet& x : all) {
        if (!x.subset_of(dp) || x == dp) continue;
        bool maximal = true;
        for (const ElementSet& y : all)
          if (y != x && y != dp && x.subset_of(y) && y.subset_of(dp)) maximal = false;
        if (maximal) want.push_back(x);
      }
      CHECK(oracle::sorted(maximal_proper_ideals_below(s, p)) == oracle::sorted(want));
    }
  }
}

TEST_CASE("minimal neighborhoods from ideals") {
  JoinSemilattice s2 = generate_sm(2);
  auto n2 = oracle::sorted(semilattice_minimal_neighborhoods(s2, s2.ground().index("ab")));
  CHECK(n2 == oracle::sorted({s2.ground().set_of({"a", "ab"}), s2.ground().set_of({"b", "ab"})}));
  JoinSemilattice s3 = generate_sm(3);
  auto n3 = semilattice_minimal_neighborhoods(s3, s3.ground().index("abc"));
  CHECK(std::count(n3.begin(), n3.end(), s3.ground().set_of({"b", "ab", "bc", "abc"})) == 1);
  CHECK(semilattice_minimal_neighborhoods(s3, 0) == std::vector<ElementSet>{ElementSet{0}});
  for (const JoinSemilattice& s : sample(200, 60, 8)) {
    ClosureSpace sp = semilattice_closure_space(s);
    oracle::Table t = oracle::table_from_space(sp);
    for (int p = 0; p < s.size(); ++p) {
      auto nb = oracle::sorted(semilattice_minimal_neighborhoods(s, p));
      CHECK(nb == oracle::sorted(minimal_neighborhoods(sp, p)));
      CHECK(nb == oracle::minimal_neighborhoods(t, p));
      for (const ElementSet& u : nb) CHECK(classify(sp, u).clopen);
    }
  }
}

TEST_CASE("completely join-irreducibles") {
  JoinSemilattice s2 = generate_sm(2);
  const GroundSet& g = s2.ground();
  CHECK(oracle::sorted(semilattice_cji(s2)) ==
        oracle::sorted({g.set_of({"a"}), g.set_of({"b"}), g.set_of({"a", "ab"}), g.set_of({"b", "ab"})}));
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    JoinSemilattice c = JoinSemilattice::from_order(GroundSet::numbered(n), Order::from_pairs(n, pairs));
    std::vector<ElementSet> single;
    for (int i = 0; i < n; ++i) single.push_back(ElementSet{i});
    CHECK(oracle::sorted(semilattice_cji(c)) == oracle::sorted(single));
  }
  for (const JoinSemilattice& s : sample(300, 60, 8)) {
    ClosureSpace sp = semilattice_closure_space(s);
    RegLattice r = enumerate_regular_closed(sp);
    std::vector<ElementSet> ji;
    for (int i : join_irreducibles(r.lattice)) ji.push_back(r.sets[i]);
    auto cji = oracle::sorted(semilattice_cji(s));
    CHECK(cji == oracle::sorted(ji));
    for (const ElementSet& a : cji) CHECK(classify(sp, a).clopen);
  }
}

TEST_CASE("lower cover criteria agree") {
  for (const JoinSemilattice& s : sample(400, 60, 8))
    for (int p = 0; p < s.size(); ++p)
      for (int n = 1; n <= 3; ++n) CHECK(lower_cover_criteria(s, p, n).agree());
}

TEST_CASE("clopen lattice equivalences") {
  ClopEquivalences e3 = clop_lattice_equivalences(generate_sm(3));
  CHECK(e3.agree());
  CHECK(e3.clop_is_lattice);
  ClopEquivalences e4 = clop_lattice_equivalences(generate_sm(4));
  CHECK(e4.agree());
  CHECK_FALSE(e4.clop_is_lattice);
  CHECK(e4.witness.find("{a,ab}") != std::string::npos);
  CHECK(e4.witness.find("{c,cd}") != std::string::npos);
  JoinSemilattice p = psub_srs();
  ClopEquivalences ep = clop_lattice_equivalences(p);
  CHECK(ep.agree());
  CHECK_FALSE(ep.clop_is_lattice);
  for (const JoinSemilattice& s : sample(500, 120, 8)) CHECK(clop_lattice_equivalences(s).agree());
}

TEST_CASE("the five-element subsemilattice has two minimal clopen upper bounds") {
  JoinSemilattice p = psub_srs();
  ClosureSpace sp = semilattice_closure_space(p);
  const GroundSet& g = p.ground();
  auto clop = enumerate_clopen(sp);
  auto is_clop = [&](const ElementSet& x) { return std::count(clop.begin(), clop.end(), x) == 1; };
  ElementSet a0 = g.set_of({"a0"}), a1 = g.set_of({"a1"});
  ElementSet u0 = g.set_of({"a0", "a1", "1", "b0"}), u1 = g.set_of({"a0", "a1", "1", "b1"});
  CHECK(is_clop(a0));
  CHECK(is_clop(a1));
  CHECK(is_clop(u0));
  CHECK(is_clop(u1));
  std::vector<ElementSet> above, minimal;
  for (const ElementSet& c : clop)
    if ((a0 | a1).subset_of(c)) above.push_back(c);
  for (const ElementSet& c : above)
    if (std::none_of(above.begin(), above.end(), [&](const ElementSet& d) { return d != c && d.subset_of(c); }))
      minimal.push_back(c);
  CHECK(oracle::sorted(minimal) == oracle::sorted({u0, u1}));
}

TEST_CASE("open sets are unions of clopens and Reg completes Clop") {
  for (const JoinSemilattice& s : sample(600, 60, 8)) {
    ClosureSpace sp = semilattice_closure_space(s);
    oracle::Table t = oracle::table_from_space(sp);
    auto clop = enumerate_clopen(sp);
    for (std::uint64_t m = 0; m <= t.full(); ++m) {
      if (!t.open(m)) continue;
      ElementSet u;
      for (const ElementSet& c : clop)
        if (oracle::mask_of(c) == (oracle::mask_of(c) & m)) u |= c;
      CHECK(oracle::mask_of(u) == m);
    }
    RegLattice r = enumerate_regular_closed(sp);
    CHECK(is_dm_completion(r.lattice, r.clopen_indices()));
    CHECK(is_tight(r.lattice, r.clopen_indices()).tight);
  }
}

TEST_CASE("join dependency decreases the largest element") {
  int edges = 0;
  for (const JoinSemilattice& s : sample(700, 60, 8)) {
    RegLattice r = enumerate_regular_closed(semilattice_closure_space(s));
    DGraph d = join_dependency(r.lattice);
    for (auto [a, b] : d.edges) {
      ++edges;
      int pa = max_of(s, r.sets[a]), pb = max_of(s, r.sets[b]);
      CHECK(s.leq(pb, pa));
      CHECK(pa != pb);
    }
    CHECK(is_bounded(r.lattice).bounded);
  }
  CHECK(edges > 0);
}

}  // TEST_SUITE
