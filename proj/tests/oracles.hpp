// Brute-force reference implementations used only by the tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "regcl/closure_space.hpp"
#include "regcl/graph.hpp"
#include "regcl/lattice.hpp"
#include "regcl/semilattice.hpp"

namespace oracle {

using regcl::ElementSet;

inline ElementSet of_mask(std::uint64_t m) { return ElementSet::from_words(m, 0); }
inline std::uint64_t mask_of(const ElementSet& s) { return s.word(0); }

// Repeats every rule until nothing changes.
inline ElementSet naive_closure(const std::vector<regcl::Rule>& rules, ElementSet x) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : rules)
      if (r.premise.subset_of(x) && !x.contains(r.conclusion)) {
        x.insert(r.conclusion);
        changed = true;
      }
  }
  return x;
}

// Closure of every subset, by table.
struct Table {
  int n = 0;
  std::vector<std::uint64_t> cl;
  std::uint64_t full() const { return (std::uint64_t{1} << n) - 1; }
  std::uint64_t closure(std::uint64_t x) const { return cl[x]; }
  std::uint64_t interior(std::uint64_t x) const { return full() & ~cl[full() & ~x]; }
  bool closed(std::uint64_t x) const { return cl[x] == x; }
  bool open(std::uint64_t x) const { return closed(full() & ~x); }
};

inline Table table_from_rules(int n, const std::vector<regcl::Rule>& rules) {
  Table t;
  t.n = n;
  t.cl.resize(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < t.cl.size(); ++x) t.cl[x] = mask_of(naive_closure(rules, of_mask(x)));
  return t;
}

inline Table table_from_space(const regcl::ClosureSpace& s) {
  Table t;
  t.n = s.size();
  t.cl.resize(std::size_t{1} << t.n);
  for (std::uint64_t x = 0; x < t.cl.size(); ++x) t.cl[x] = mask_of(s.closure(of_mask(x)));
  return t;
}

inline std::vector<ElementSet> sorted(std::vector<ElementSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<ElementSet> regular_closed(const Table& t) {
  std::vector<ElementSet> out;
  for (std::uint64_t x = 0; x <= t.full(); ++x)
    if (t.closure(t.interior(x)) == x) out.push_back(of_mask(x));
  return sorted(out);
}

inline std::vector<ElementSet> clopen(const Table& t) {
  std::vector<ElementSet> out;
  for (std::uint64_t x = 0; x <= t.full(); ++x)
    if (t.closed(x) && t.open(x)) out.push_back(of_mask(x));
  return sorted(out);
}

inline std::vector<ElementSet> closed(const Table& t) {
  std::vector<ElementSet> out;
  for (std::uint64_t x = 0; x <= t.full(); ++x)
    if (t.closed(x)) out.push_back(of_mask(x));
  return sorted(out);
}

inline std::vector<ElementSet> minimal_coverings(const Table& t, int p) {
  std::vector<std::uint64_t> cov;
  for (std::uint64_t x = 0; x <= t.full(); ++x)
    if (t.closure(x) >> p & 1) cov.push_back(x);
  std::vector<ElementSet> out;
  for (auto x : cov) {
    bool minimal = true;
    for (auto y : cov) minimal = minimal && !(y != x && (y & ~x) == 0);
    if (minimal) out.push_back(of_mask(x));
  }
  return sorted(out);
}

// Inclusion-minimal open sets containing p.
inline std::vector<ElementSet> minimal_neighborhoods(const Table& t, int p) {
  std::vector<std::uint64_t> nb;
  for (std::uint64_t x = 0; x <= t.full(); ++x)
    if ((x >> p & 1) && t.open(x)) nb.push_back(x);
  std::vector<ElementSet> out;
  for (auto x : nb) {
    bool minimal = true;
    for (auto y : nb) minimal = minimal && !(y != x && (y & ~x) == 0);
    if (minimal) out.push_back(of_mask(x));
  }
  return sorted(out);
}

// Random implication system on n points with up to k rules.
inline std::vector<regcl::Rule> random_rules(std::mt19937_64& rng, int n, int k) {
  std::vector<regcl::Rule> rules;
  int count = static_cast<int>(rng() % static_cast<std::uint64_t>(k + 1));
  for (int i = 0; i < count; ++i) {
    int c = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::uint64_t prem = rng() & ((std::uint64_t{1} << n) - 1) & ~(std::uint64_t{1} << c);
    if (prem == 0) continue;
    rules.push_back({of_mask(prem), c});
  }
  return rules;
}

// ---- lattices given only by an order matrix

inline int lub(const std::vector<std::vector<bool>>& leq, int a, int b) {
  int n = static_cast<int>(leq.size());
  for (int c = 0; c < n; ++c) {
    if (!leq[a][c] || !leq[b][c]) continue;
    bool least = true;
    for (int d = 0; d < n; ++d)
      if (leq[a][d] && leq[b][d] && !leq[c][d]) least = false;
    if (least) return c;
  }
  return -1;
}

inline int glb(const std::vector<std::vector<bool>>& leq, int a, int b) {
  int n = static_cast<int>(leq.size());
  for (int c = 0; c < n; ++c) {
    if (!leq[c][a] || !leq[c][b]) continue;
    bool greatest = true;
    for (int d = 0; d < n; ++d)
      if (leq[d][a] && leq[d][b] && !leq[d][c]) greatest = false;
    if (greatest) return c;
  }
  return -1;
}

inline std::vector<int> lower_covers(const std::vector<std::vector<bool>>& leq, int x) {
  int n = static_cast<int>(leq.size());
  std::vector<int> out;
  for (int y = 0; y < n; ++y) {
    if (y == x || !leq[y][x]) continue;
    bool cover = true;
    for (int z = 0; z < n; ++z)
      if (z != x && z != y && leq[y][z] && leq[z][x]) cover = false;
    if (cover) out.push_back(y);
  }
  return out;
}

inline std::vector<int> join_irreducibles(const regcl::FiniteLattice& L) {
  auto leq = L.leq_matrix();
  std::vector<int> out;
  for (int x = 0; x < L.size(); ++x)
    if (lower_covers(leq, x).size() == 1) out.push_back(x);
  return out;
}

inline bool semidistributive(const regcl::FiniteLattice& L) {
  int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (L.join(x, z) == L.join(y, z) && L.join(L.meet(x, y), z) != L.join(x, z)) return false;
        if (L.meet(x, z) == L.meet(y, z) && L.meet(L.join(x, y), z) != L.meet(x, z)) return false;
      }
  return true;
}

inline bool pseudocomplemented(const regcl::FiniteLattice& L) {
  int n = L.size();
  for (int x = 0; x < n; ++x) {
    std::vector<int> ys;
    for (int y = 0; y < n; ++y)
      if (L.meet(x, y) == L.bottom()) ys.push_back(y);
    bool has_max = false;
    for (int m : ys)
      has_max = has_max || std::all_of(ys.begin(), ys.end(), [&](int y) { return L.leq(y, m); });
    if (!has_max) return false;
  }
  return true;
}

// L is the DM completion of K iff x ↦ ↓x ∩ K is an order isomorphism onto the cuts of K.
inline bool dm_completion(const regcl::FiniteLattice& L, const std::vector<int>& K) {
  int k = static_cast<int>(K.size());
  if (k > 20) return false;
  std::set<std::uint64_t> cuts;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a) {
    std::uint64_t upper = 0, lower = 0;
    for (int j = 0; j < k; ++j) {
      bool above = true;
      for (int i = 0; i < k; ++i)
        if ((a >> i & 1) && !L.leq(K[i], K[j])) above = false;
      if (above) upper |= std::uint64_t{1} << j;
    }
    for (int i = 0; i < k; ++i) {
      bool below = true;
      for (int j = 0; j < k; ++j)
        if ((upper >> j & 1) && !L.leq(K[i], K[j])) below = false;
      if (below) lower |= std::uint64_t{1} << i;
    }
    cuts.insert(lower);
  }
  std::set<std::uint64_t> images;
  std::vector<std::uint64_t> img(L.size());
  for (int x = 0; x < L.size(); ++x) {
    for (int i = 0; i < k; ++i)
      if (L.leq(K[i], x)) img[x] |= std::uint64_t{1} << i;
    images.insert(img[x]);
  }
  if (images != cuts || static_cast<int>(images.size()) != L.size()) return false;
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y)
      if (L.leq(x, y) != ((img[x] & ~img[y]) == 0)) return false;
  return true;
}

// ---- graphs

inline bool connected(const regcl::Graph& g, std::uint32_t m) {
  if (m == 0) return true;
  std::uint32_t seen = m & -m, frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < g.size(); ++v)
      if (frontier >> v & 1) next |= g.neighbors(v) & m;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == m;
}

inline std::vector<std::uint32_t> connected_sets(const regcl::Graph& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 1; m < (1u << g.size()); ++m)
    if (connected(g, m)) out.push_back(m);
  return out;
}

inline bool touches(const regcl::Graph& g, std::uint32_t a, std::uint32_t b) {
  if (a & b) return false;
  for (int v = 0; v < g.size(); ++v)
    if ((a >> v & 1) && (g.neighbors(v) & b)) return true;
  return false;
}

// Closure table of the disjoint-union closure, iterating pairs naively.
inline Table graph_table(const regcl::ConnectedCatalog& cat) {
  std::vector<regcl::Rule> rules;
  int n = cat.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (touches(cat.graph, cat.sets[i], cat.sets[j]))
        rules.push_back({ElementSet{i, j}, cat.find(cat.sets[i] | cat.sets[j])});
  return table_from_rules(n, rules);
}

inline bool has_induced(const regcl::Graph& g, const regcl::Graph& h) {
  int n = g.size(), k = h.size();
  std::vector<int> pick(k);
  std::vector<bool> used(n);
  std::function<bool(int)> rec = [&](int i) {
    if (i == k) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i; ++j) ok = ok && g.adjacent(v, pick[j]) == h.adjacent(i, j);
      if (!ok) continue;
      used[v] = true;
      pick[i] = v;
      if (rec(i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return rec(0);
}

// No induced cycle of length ≥ 4 and no induced diamond.
inline bool block_graph(const regcl::Graph& g) {
  if (has_induced(g, regcl::graphs::diamond())) return false;
  for (int k = 4; k <= g.size(); ++k)
    if (has_induced(g, regcl::graphs::cycle(k))) return false;
  return true;
}

// Subsets of Cuts(H) satisfying the pseudo-ultrafilter clauses.
inline int count_pseudo_ultrafilters(const regcl::Graph& g, std::uint32_t h) {
  std::vector<std::uint32_t> cuts;
  for (std::uint32_t x = h; x; x = (x - 1) & h)
    if (connected(g, x) && connected(g, h & ~x)) cuts.push_back(x);
  int k = static_cast<int>(cuts.size());
  auto idx = [&](std::uint32_t x) {
    return static_cast<int>(std::find(cuts.begin(), cuts.end(), x) - cuts.begin());
  };
  int count = 0;
  for (std::uint64_t mu = 0; mu < (std::uint64_t{1} << k); ++mu) {
    auto in = [&](std::uint32_t x) { return (mu >> idx(x) & 1) != 0; };
    if (!in(h)) continue;
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) {
      std::uint32_t x = cuts[a];
      if (x != h && in(x) == in(h & ~x)) ok = false;
      for (int b = 0; b < k && ok; ++b) {
        std::uint32_t y = cuts[b];
        if (x & y) continue;
        std::uint32_t z = x | y;
        int zi = idx(z);
        if (zi == k) continue;
        if (in(x) && in(y) && !in(z)) ok = false;
        if (!in(x) && !in(y) && in(z)) ok = false;
      }
    }
    count += ok;
  }
  return count;
}

// ---- semilattices

inline std::vector<ElementSet> ideals(const regcl::JoinSemilattice& s) {
  int n = s.size();
  std::vector<ElementSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (!(m >> x & 1)) continue;
      for (int y = 0; y < n && ok; ++y) {
        if (s.leq(y, x) && !(m >> y & 1)) ok = false;
        if ((m >> y & 1) && !(m >> s.join(x, y) & 1)) ok = false;
      }
    }
    if (ok) out.push_back(of_mask(m));
  }
  return sorted(out);
}

}  // namespace oracle
