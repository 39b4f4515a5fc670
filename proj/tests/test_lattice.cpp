#include <doctest.h>

#include "oracles.hpp"
#include "regcl/graph.hpp"
#include "regcl/semilattice.hpp"
#include "regcl/spaces.hpp"

using namespace regcl;

namespace {

// Closed-set lattices of random implication systems, plus Reg of the same spaces.
std::vector<FiniteLattice> random_lattices(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<FiniteLattice> out;
  while (static_cast<int>(out.size()) < count) {
    int n = 1 + static_cast<int>(rng() % 5);
    ClosureSpace s = ClosureSpace::implications(GroundSet::numbered(n), oracle::random_rules(rng, n, 5));
    out.push_back(FiniteLattice::from_sets(enumerate_closed(s)));
    out.push_back(enumerate_regular_closed(s).lattice);
  }
  return out;
}

int idx(const RegLattice& r, const ClosureSpace& s, std::initializer_list<std::string> labels) {
  int i = r.index_of(s.set_of(labels));
  REQUIRE(i >= 0);
  return i;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("validation") {
  CHECK(validate_lattice(lattices::benzene()).valid());
  FiniteLattice m4 = lattices::m4();
  CHECK(m4.has_ortho());
  CHECK(validate_lattice(m4).valid());
  std::vector<std::vector<bool>> cyc = {{true, true, false}, {false, true, true}, {true, false, true}};
  ValidationReport r = validate_lattice(cyc);
  CHECK_FALSE(r.valid());
  CHECK_FALSE(r.violations.empty());
  CHECK_THROWS_AS(FiniteLattice::from_leq(cyc), Error);
  // Two maximal elements.
  std::vector<std::vector<bool>> v = {{true, true, true}, {false, true, false}, {false, false, true}};
  CHECK_FALSE(validate_lattice(v).valid());
  FiniteLattice c3 = FiniteLattice::chain(3);
  CHECK_FALSE(ortho_violations(c3, {2, 1, 0}).empty());
  CHECK(ortho_violations(FiniteLattice::chain(2), {1, 0}).empty());
}

TEST_CASE("irreducibles against brute force") {
  CHECK(join_irreducibles(lattices::benzene()).size() == 4);
  for (int n = 1; n <= 6; ++n) CHECK(static_cast<int>(join_irreducibles(FiniteLattice::chain(n)).size()) == n - 1);
  for (const FiniteLattice& L : random_lattices(21, 80)) {
    CHECK(join_irreducibles(L) == oracle::join_irreducibles(L));
    CHECK(meet_irreducibles(L) == oracle::join_irreducibles(L.dual()));
  }
}

TEST_CASE("arrow relations follow their definitions") {
  for (const FiniteLattice& L : random_lattices(22, 40)) {
    ArrowReport a = irreducibles_and_arrows(L);
    std::set<std::pair<int, int>> up(a.up_arrows.begin(), a.up_arrows.end());
    std::set<std::pair<int, int>> down(a.down_arrows.begin(), a.down_arrows.end());
    for (size_t i = 0; i < a.ji.size(); ++i)
      for (size_t k = 0; k < a.mi.size(); ++k) {
        int p = a.ji[i], u = a.mi[k];
        CHECK(up.count({p, u}) == (L.leq(p, a.upper_cover[k]) && !L.leq(p, u)));
        CHECK(down.count({u, p}) == (L.leq(a.lower_cover[i], u) && !L.leq(p, u)));
      }
  }
}

TEST_CASE("join dependency via arrows equals the direct definition") {
  for (const FiniteLattice& L : random_lattices(23, 80)) {
    CHECK(join_dependency(L).agree());
    CHECK(is_bounded(L).arrow_and_direct_agree);
  }
  for (const auto& name : lattices::names()) CHECK(join_dependency(lattices::by_name(name)).agree());
}

TEST_CASE("semidistributivity against brute force") {
  for (const FiniteLattice& L : random_lattices(24, 80)) {
    SdReport r = semidistributivity(L);
    CHECK(r.sd == oracle::semidistributive(L));
    if (r.join_witness) {
      auto [x, y, z] = *r.join_witness;
      CHECK(L.join(x, z) == L.join(y, z));
      CHECK(L.join(L.meet(x, y), z) != L.join(x, z));
    }
    if (r.meet_witness) {
      auto [x, y, z] = *r.meet_witness;
      CHECK(L.meet(x, z) == L.meet(y, z));
      CHECK(L.meet(L.join(x, y), z) != L.meet(x, z));
    }
  }
  for (int n = 1; n <= 5; ++n) CHECK(semidistributivity(FiniteLattice::chain(n)).sd);
  CHECK_FALSE(semidistributivity(lattices::m3()).sd);
  CHECK_FALSE(is_bounded(lattices::m3()).bounded);
}

TEST_CASE("Reg of the M3-minus space fails semidistributivity at ab, bc, 1b") {
  ClosureSpace s = spaces::m3_minus();
  RegLattice r = enumerate_regular_closed(s);
  const FiniteLattice& L = r.lattice;
  int ab = idx(r, s, {"a", "b"}), bc = idx(r, s, {"b", "c"}), b1 = idx(r, s, {"1", "b"});
  int b = idx(r, s, {"b"});
  CHECK(L.meet(ab, b1) == b);
  CHECK(L.meet(bc, b1) == b);
  CHECK(L.meet(L.join(ab, bc), b1) != b);
  CHECK_FALSE(semidistributivity(L).sd);
}

TEST_CASE("bounded implies semidistributive") {
  int bounded = 0;
  for (const FiniteLattice& L : random_lattices(25, 100)) {
    Boundedness b = is_bounded(L);
    if (b.bounded) {
      ++bounded;
      CHECK(semidistributivity(L).sd);
    }
    if (!b.lower_bounded) CHECK_FALSE(b.cycle.empty());
  }
  CHECK(bounded > 0);
  for (int n = 0; n <= 4; ++n)
    for (const Graph& g : graphs::all_up_to_iso(n))
      CHECK(is_bounded(enumerate_regular_closed(graph_closure_space(connected_catalog(g))).lattice).bounded);
}

TEST_CASE("RSD family") {
  FiniteLattice l4 = lattices::l4();
  RsdResult r = satisfies_rsd(l4, 1);
  CHECK_FALSE(r.holds);
  REQUIRE(r.a.size() == 2);
  CHECK(l4.join(r.a[0], r.c) == l4.join(r.a[1], r.c));
  CHECK(l4.meet(r.a[0], r.c) == l4.meet(r.a[0], r.a[1]));
  CHECK_FALSE(l4.leq(r.a[0], r.c));
  for (int m = 1; m <= 3; ++m) {
    CHECK(satisfies_rsd(lattices::boolean(3), m).holds);
    CHECK(satisfies_rsd(FiniteLattice::chain(4), m).holds);
  }
  for (const FiniteLattice& L : random_lattices(26, 60)) {
    SdReport sd = semidistributivity(L);
    bool prev = true;
    for (int m = 3; m >= 1; --m) {
      bool h = satisfies_rsd(L, m).holds;
      if (sd.sd_join || sd.sd_meet) CHECK(h);
      if (!prev) CHECK_FALSE(h);  // RSD(m+1) fails only if RSD(m) fails
      prev = h;
    }
  }
}

TEST_CASE("pseudocomplementation") {
  CHECK_FALSE(is_pseudocomplemented(lattices::m4()));
  for (int k = 0; k <= 4; ++k) CHECK(is_pseudocomplemented(lattices::boolean(k)));
  for (const FiniteLattice& L : random_lattices(27, 80)) CHECK(is_pseudocomplemented(L) == oracle::pseudocomplemented(L));
}

TEST_CASE("distributivity and complements") {
  CHECK(is_distributive(lattices::boolean(3)));
  CHECK_FALSE(is_distributive(lattices::m3()));
  CHECK(is_complemented(lattices::m3()));
  CHECK_FALSE(is_complemented(FiniteLattice::chain(3)));
}

TEST_CASE("ortholattices are self-dual") {
  for (const char* name : {"M4", "benzene", "B2"}) {
    FiniteLattice L = lattices::by_name(name);
    REQUIRE(L.has_ortho());
    CHECK(is_isomorphic(L, L.dual()));
    for (int i = 0; i < L.size(); ++i)
      for (int j = 0; j < L.size(); ++j) CHECK(L.ortho(L.join(i, j)) == L.meet(L.ortho(i), L.ortho(j)));
  }
}

TEST_CASE("parallel sums") {
  FiniteLattice b2 = parallel_sum(FiniteLattice::chain(1), FiniteLattice::chain(1));
  CHECK(b2.size() == 4);
  CHECK(is_isomorphic(b2, lattices::boolean(2)));
  FiniteLattice hex = parallel_sum(FiniteLattice::chain(2), FiniteLattice::chain(2));
  CHECK(hex.size() == 6);
  CHECK(is_isomorphic(hex, lattices::benzene()));
  FiniteLattice m = parallel_sum(lattices::m3(), FiniteLattice::chain(3));
  CHECK(m.size() == 5 + 3 + 2);
  CHECK(validate_lattice(m).valid());
}

TEST_CASE("forbidden sublattices") {
  CHECK_FALSE(find_sublattice_copy(FiniteLattice::chain(6), lattices::m3()).has_value());
  CHECK(find_sublattice_copy(lattices::m4(), lattices::m3()).has_value());
  for (const auto& name : lattices::names()) {
    FiniteLattice P = lattices::by_name(name);
    auto e = find_sublattice_copy(P, P);
    REQUIRE(e.has_value());
    CHECK(is_isomorphic(induced(P, generated_sublattice(P, e->image)), P));
  }

  ClosureSpace s = spaces::rsd1_failure();
  RegLattice r = enumerate_regular_closed(s);
  const FiniteLattice& L = r.lattice;
  auto c4 = find_sublattice_copy(L, lattices::l4());
  REQUIRE(c4.has_value());
  std::vector<int> gens = {idx(r, s, {"a", "d", "e"}), idx(r, s, {"b", "d", "e"}), idx(r, s, {"c", "d"})};
  CHECK(is_isomorphic(induced(L, generated_sublattice(L, gens)), lattices::l4()));
  CHECK(find_sublattice_copy(L, lattices::l1()).has_value());
  std::vector<int> atoms = {idx(r, s, {"c", "u"}), idx(r, s, {"d", "u"}), idx(r, s, {"e", "u"})};
  CHECK(is_isomorphic(induced(L, generated_sublattice(L, atoms)), lattices::l1()));
  CHECK_FALSE(satisfies_rsd(L, 1).holds);
  CHECK_FALSE(semidistributivity(L).sd);
}

TEST_CASE("finite semilattices give bounded Reg satisfying RSD") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    JoinSemilattice js = random_semilattice(seed, 8);
    RegLattice r = enumerate_regular_closed(semilattice_closure_space(js));
    CHECK(is_bounded(r.lattice).bounded);
    CHECK(semidistributivity(r.lattice).sd);
    for (int m = 1; m <= 3; ++m) CHECK(satisfies_rsd(r.lattice, m).holds);
  }
}

TEST_CASE("poset-type Reg: semidistributive iff no copy of L1") {
  // Rules whose premises lie strictly below their conclusion in 0 < 1 < ... < n-1,
  // with the order then thinned to the pairs the rules need.
  std::mt19937_64 rng(31);
  int sd = 0, non = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    std::vector<Rule> rules;
    std::vector<std::pair<int, int>> pairs;
    int k = 1 + static_cast<int>(rng() % 4);
    for (int r = 0; r < k; ++r) {
      int p = 1 + static_cast<int>(rng() % (n - 1));
      ElementSet prem;
      for (int q = 0; q < p; ++q)
        if (rng() % 2) prem |= ElementSet{q};
      if (prem.count() < 2) continue;
      rules.push_back({prem, p});
      prem.for_each([&](int q) { pairs.emplace_back(q, p); });
    }
    ClosureSpace s = ClosureSpace::implications(GroundSet::numbered(n), rules);
    Order o = Order::from_pairs(n, pairs);
    REQUIRE(has_poset_type(s, o));
    RegLattice r = enumerate_regular_closed(s);
    bool is_sd = semidistributivity(r.lattice).sd;
    (is_sd ? sd : non)++;
    CHECK(is_sd == !find_sublattice_copy(r.lattice, lattices::l1()).has_value());
    for (int m = 1; m <= 3; ++m) CHECK(satisfies_rsd(r.lattice, m).holds);
  }
  CHECK(sd > 0);
  CHECK(non > 0);
  ClosureSpace m3 = spaces::m3_minus();
  CHECK(has_poset_type(m3, spaces::m3_minus_order()));
  RegLattice r = enumerate_regular_closed(m3);
  CHECK_FALSE(semidistributivity(r.lattice).sd);
  CHECK(find_sublattice_copy(r.lattice, lattices::l1()).has_value());
}

TEST_CASE("Dedekind-MacNeille completion") {
  std::mt19937_64 rng(28);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) pairs.emplace_back(i, j);
    Order K = Order::from_pairs(n, pairs);
    DmCompletion dm = dedekind_macneille(K);
    CHECK(validate_lattice(dm.lattice).valid());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(dm.lattice.leq(dm.embedding[i], dm.embedding[j]) == K.leq(i, j));
    CHECK(is_dm_completion(dm.lattice, dm.embedding));
    CHECK(oracle::dm_completion(dm.lattice, dm.embedding));
  }
  for (const FiniteLattice& L : random_lattices(29, 60)) {
    std::vector<int> all(L.size());
    std::iota(all.begin(), all.end(), 0);
    CHECK(is_dm_completion(L, all));
    CHECK(is_isomorphic(dedekind_macneille(Order(L.leq_matrix())).lattice, L));
    if (L.size() > 20) continue;
    std::vector<int> K;
    for (int i = 0; i < L.size(); ++i)
      if (rng() % 2) K.push_back(i);
    if (K.empty()) continue;
    CHECK(is_dm_completion(L, K) == oracle::dm_completion(L, K));
  }
}

TEST_CASE("tightness") {
  for (const FiniteLattice& L : random_lattices(30, 60)) {
    CHECK(is_tight(L, {L.bottom(), L.top()}).tight);
    std::mt19937_64 rng(L.size());
    std::vector<int> K;
    for (int i = 0; i < L.size(); ++i)
      if (rng() % 2) K.push_back(i);
    if (K.size() > 14) continue;
    CHECK(is_tight(L, K).tight == is_tight_bruteforce(L, K, -1).tight);
  }
  ClosureSpace gap = spaces::poset_clop_gap();
  RegLattice r = enumerate_regular_closed(gap);
  TightnessReport t = is_tight(r.lattice, r.clopen_indices());
  CHECK_FALSE(t.tight);
  CHECK_FALSE(t.joins_ok);
  CHECK_FALSE(t.witness.empty());
}

TEST_CASE("orthoposet spaces") {
  // Clop(Ω) consists of the Z(p); Ω has one point per maximal anti-orthogonal set.
  OrthoposetSpace b2 = orthoposet_space(lattices::two_atom_boolean());
  CHECK(b2.space.size() == 2);
  FiniteLattice c2 = FiniteLattice::chain(2);
  c2.set_ortho({1, 0});
  OrthoposetSpace one = orthoposet_space(c2);
  CHECK(one.space.size() == 1);
  CHECK(enumerate_clopen(one.space).size() == 2);
  for (const char* name : {"B2", "benzene", "M4"}) {
    FiniteLattice L = lattices::by_name(name);
    OrthoposetSpace o = orthoposet_space(L);
    auto clop = enumerate_clopen(o.space);
    CHECK(static_cast<int>(clop.size()) == L.size());
    for (int p = 0; p < L.size(); ++p) {
      CHECK(std::count(clop.begin(), clop.end(), o.z[p]) == 1);
      CHECK(o.z[L.ortho(p)] == o.z[p].complement(o.space.size()));
      for (int q = 0; q < L.size(); ++q) CHECK(L.leq(p, q) == o.z[p].subset_of(o.z[q]));
    }
    std::vector<ElementSet> zs(o.z.begin(), o.z.end());
    CHECK(is_isomorphic(FiniteLattice::from_sets(zs), L));
  }
  CHECK_THROWS_AS(orthoposet_space(lattices::m3()), Error);
}

}  // TEST_SUITE
