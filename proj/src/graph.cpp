#include "regcl/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace regcl {

namespace {

int popcount(VertexMask m) { return std::popcount(m); }

bool is_subset(VertexMask a, VertexMask b) { return (a & ~b) == 0; }

}  // namespace

// ------------------------------------------------------------------- Graph

Graph::Graph(GroundSet vertices, const std::vector<std::pair<int, int>>& edges)
    : vertices_(std::move(vertices)) {
  int n = vertices_.size();
  if (n > kMaxGraphVertices)
    throw Error(ErrorCode::TooManyVertices,
                "graphs are limited to " + std::to_string(kMaxGraphVertices) + " vertices");
  adj_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::InvalidGraph, "self-loop at " + vertices_.label(u));
    adj_[u] |= 1u << v;
    adj_[v] |= 1u << u;
  }
}

Graph Graph::from_labels(const std::vector<std::string>& vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
  GroundSet g(vertices);
  std::vector<std::pair<int, int>> e;
  for (const auto& [a, b] : edges) e.push_back({g.index(a), g.index(b)});
  return Graph(std::move(g), e);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int v = u + 1; v < size(); ++v)
      if (adjacent(u, v)) out.push_back({u, v});
  return out;
}

bool Graph::connected(VertexMask m) const {
  if (m == 0) return true;
  VertexMask seen = m & (~m + 1), frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
    next &= m & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == m;
}

std::vector<VertexMask> Graph::components(VertexMask m) const {
  std::vector<VertexMask> out;
  while (m) {
    VertexMask seen = m & (~m + 1), frontier = seen;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
      next &= m & ~seen;
      seen |= next;
      frontier = next;
    }
    out.push_back(seen);
    m &= ~seen;
  }
  return out;
}

bool Graph::touches(VertexMask u, VertexMask v) const {
  if (u & v) return false;
  for (VertexMask f = u; f; f &= f - 1)
    if (adj_[std::countr_zero(f)] & v) return true;
  return false;
}

Graph Graph::induced(VertexMask m) const {
  std::vector<int> keep;
  for (VertexMask f = m; f; f &= f - 1) keep.push_back(std::countr_zero(f));
  std::vector<std::string> labels;
  for (int v : keep) labels.push_back(vertices_.label(v));
  std::vector<std::pair<int, int>> e;
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j])) e.push_back({static_cast<int>(i), static_cast<int>(j)});
  return Graph(GroundSet(labels), e);
}

std::string Graph::format(VertexMask m) const {
  bool short_labels = true;
  for (const auto& l : vertices_.labels()) short_labels = short_labels && l.size() == 1;
  std::string s;
  bool first = true;
  for (VertexMask f = m; f; f &= f - 1) {
    if (!short_labels && !first) s += "+";
    s += vertices_.label(std::countr_zero(f));
    first = false;
  }
  return s;
}

// --------------------------------------------------------------- builtins

namespace graphs {

namespace {

GroundSet letters(int n) {
  std::vector<std::string> l;
  for (int i = 0; i < n; ++i) l.push_back(std::string(1, static_cast<char>('a' + i)));
  return GroundSet(l);
}

GroundSet digits(int n) {
  std::vector<std::string> l;
  for (int i = 0; i < n; ++i) l.push_back(std::to_string(i));
  return GroundSet(l);
}

}  // namespace

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(letters(n), e);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(letters(n), e);
}

Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(letters(n), e);
}

// Diagonal a–b; c and d non-adjacent.
Graph diamond() { return Graph(letters(4), {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

// Center a, leaves b, c, ...
Graph star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph(letters(leaves + 1), e);
}

Graph k33_minus_e() {
  return Graph(digits(6), {{0, 1}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {4, 5}});
}

Graph empty(int n) { return Graph(letters(n), {}); }

Graph by_name(const std::string& name) {
  auto num = [&](size_t from) {
    std::string rest = name.substr(from);
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit))
      throw Error(ErrorCode::UnknownName, "no built-in graph named '" + name + "'");
    return std::stoi(rest);
  };
  if (name == "diamond") return diamond();
  if (name == "K33_minus_e") return k33_minus_e();
  if (name.rfind("star", 0) == 0) return star(num(4));
  if (name.rfind("K", 0) == 0) return complete(num(1));
  if (name.rfind("C", 0) == 0) return cycle(num(1));
  if (name.rfind("P", 0) == 0) return path(num(1));
  if (name.rfind("E", 0) == 0) return empty(num(1));
  throw Error(ErrorCode::UnknownName, "no built-in graph named '" + name + "'");
}

std::vector<Graph> all_up_to_iso(int n) {
  if (n > 6) throw Error(ErrorCode::TooLarge, "isomorphism classes are enumerated up to 6 vertices");
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<int> slot_of(n * n, -1);
  for (size_t k = 0; k < slots.size(); ++k) {
    slot_of[slots[k].first * n + slots[k].second] = static_cast<int>(k);
    slot_of[slots[k].second * n + slots[k].first] = static_cast<int>(k);
  }
  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  std::uint32_t total = 1u << slots.size();
  for (std::uint32_t code = 0; code < total; ++code) {
    std::uint32_t best = code;
    for (const auto& q : perms) {
      std::uint32_t c = 0;
      for (size_t k = 0; k < slots.size(); ++k)
        if (code >> k & 1) c |= 1u << slot_of[q[slots[k].first] * n + q[slots[k].second]];
      best = std::min(best, c);
    }
    if (!seen.insert(best).second) continue;
    std::vector<std::pair<int, int>> e;
    for (size_t k = 0; k < slots.size(); ++k)
      if (best >> k & 1) e.push_back(slots[k]);
    out.push_back(Graph(digits(n), e));
  }
  return out;
}

}  // namespace graphs

// ---------------------------------------------------------------- catalog

int ConnectedCatalog::find(VertexMask m) const {
  auto it = index.find(m);
  return it == index.end() ? -1 : it->second;
}

ElementSet ConnectedCatalog::lift(const std::vector<VertexMask>& ms) const {
  ElementSet s;
  for (VertexMask m : ms) {
    int i = find(m);
    if (i < 0)
      throw Error(ErrorCode::InvalidGraph, "'" + graph.format(m) + "' is not a connected set");
    s.insert(i);
  }
  return s;
}

ElementSet ConnectedCatalog::below(VertexMask h) const {
  ElementSet s;
  for (int i = 0; i < size(); ++i)
    if (is_subset(sets[i], h)) s.insert(i);
  return s;
}

VertexMask ConnectedCatalog::union_of(const ElementSet& s) const {
  VertexMask m = 0;
  s.for_each([&](int i) { m |= sets[i]; });
  return m;
}

ConnectedCatalog connected_catalog(const Graph& g) {
  ConnectedCatalog cat;
  cat.graph = g;
  int n = g.size();
  if (n > kMaxGraphVertices)
    throw Error(ErrorCode::TooManyVertices, "too many vertices for a connected-set catalog");
  // Grow connected sets from their least vertex to avoid scanning 2^n masks.
  std::set<VertexMask> found;
  for (int v = 0; v < n; ++v) {
    VertexMask allowed = g.all() & ~((1u << v) - 1);
    std::vector<VertexMask> stack{1u << v};
    found.insert(1u << v);
    while (!stack.empty()) {
      VertexMask m = stack.back();
      stack.pop_back();
      VertexMask border = 0;
      for (VertexMask f = m; f; f &= f - 1) border |= g.neighbors(std::countr_zero(f));
      border &= allowed & ~m;
      for (VertexMask b = border; b; b &= b - 1) {
        VertexMask m2 = m | (b & (~b + 1));
        if (found.insert(m2).second) {
          if (found.size() > static_cast<size_t>(kMaxElements))
            throw Error(ErrorCode::TooManyVertices,
                        "more than " + std::to_string(kMaxElements) + " connected sets");
          stack.push_back(m2);
        }
      }
    }
  }
  cat.sets.assign(found.begin(), found.end());
  std::sort(cat.sets.begin(), cat.sets.end(), [](VertexMask a, VertexMask b) {
    return std::make_pair(popcount(a), a) < std::make_pair(popcount(b), b);
  });
  std::vector<std::string> labels;
  for (int i = 0; i < cat.size(); ++i) {
    cat.index[cat.sets[i]] = i;
    labels.push_back(g.format(cat.sets[i]));
  }
  cat.ground = GroundSet(labels);
  return cat;
}

std::vector<ElementSet> connected_partitions(const ConnectedCatalog& cat, VertexMask h) {
  std::vector<ElementSet> out;
  ElementSet blocks;
  std::function<void(VertexMask)> rec = [&](VertexMask rest) {
    if (rest == 0) {
      out.push_back(blocks);
      return;
    }
    VertexMask low = rest & (~rest + 1);
    VertexMask others = rest & ~low;
    // Every block containing the least remaining vertex.
    for (VertexMask sub = others;; sub = (sub - 1) & others) {
      int i = cat.find(sub | low);
      if (i >= 0) {
        blocks.insert(i);
        rec(rest & ~(sub | low));
        blocks.erase(i);
      }
      if (sub == 0) break;
    }
  };
  rec(h);
  std::sort(out.begin(), out.end());
  return out;
}

ClosureSpace graph_closure_space(const ConnectedCatalog& cat) {
  std::vector<Rule> rules;
  const Graph& g = cat.graph;
  for (int i = 0; i < cat.size(); ++i)
    for (int j = i + 1; j < cat.size(); ++j)
      if (g.touches(cat.sets[i], cat.sets[j]))
        rules.push_back({ElementSet{i, j}, cat.find(cat.sets[i] | cat.sets[j])});
  ClosureSpace space = ClosureSpace::implications(cat.ground, std::move(rules));
  space.set_coverings_provider(
      [cat](int p) { return connected_partitions(cat, cat.sets[p]); });
  return space;
}

// ------------------------------------------------------------ block graphs

bool has_k4(const Graph& g) {
  int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      VertexMask common = g.neighbors(a) & g.neighbors(b) & ~((2u << b) - 1);
      for (VertexMask f = common; f; f &= f - 1)
        if (g.neighbors(std::countr_zero(f)) & common) return true;
    }
  return false;
}

bool is_block_graph(const Graph& g) {
  // Biconnected components via Tarjan's edge stack; each must be a clique.
  int n = g.size();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> stack;
  int timer = 0;
  bool ok = true;
  auto check_block = [&](std::pair<int, int> until) {
    VertexMask block = 0;
    for (;;) {
      auto e = stack.back();
      stack.pop_back();
      block |= (1u << e.first) | (1u << e.second);
      if (e == until) break;
    }
    for (VertexMask f = block; f; f &= f - 1) {
      int v = std::countr_zero(f);
      if ((g.neighbors(v) & block) != (block & ~(1u << v))) ok = false;
    }
  };
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    for (int v = 0; v < n; ++v) {
      if (!g.adjacent(u, v) || v == parent) continue;
      if (disc[v] < 0) {
        stack.push_back({u, v});
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) check_block({u, v});
      } else if (disc[v] < disc[u]) {
        stack.push_back({u, v});
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  return ok;
}

bool block_graph_by_forbidden_subgraphs(const Graph& g) {
  if (g.size() > 20) throw Error(ErrorCode::TooLarge, "induced-subgraph sweep above 20 vertices");
  for (std::uint64_t mm = 0; mm <= g.all(); ++mm) {
    VertexMask m = static_cast<VertexMask>(mm);
    int k = popcount(m);
    if (k >= 4) {
      std::vector<int> deg;
      int edges = 0;
      for (VertexMask f = m; f; f &= f - 1) {
        int d = popcount(g.neighbors(std::countr_zero(f)) & m);
        deg.push_back(d);
        edges += d;
      }
      edges /= 2;
      bool is_cycle = g.connected(m) && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
      bool is_diamond = k == 4 && edges == 5;
      if (is_cycle || is_diamond) return false;
    }
  }
  return true;
}

std::vector<VertexMask> cuts(const ConnectedCatalog& cat, VertexMask h) {
  std::vector<VertexMask> out;
  for (VertexMask x : cat.sets)
    if (is_subset(x, h) && cat.graph.connected(h & ~x)) out.push_back(x);
  return out;
}

std::vector<VertexMask> coco(const ConnectedCatalog& cat, VertexMask x, VertexMask h) {
  auto comps = cat.graph.components(h & ~x);
  std::sort(comps.begin(), comps.end());
  return comps;
}

// -------------------------------------------------------- lattice criterion

namespace {

struct Crossing {
  VertexMask p[4];
};

std::vector<Crossing> crossings(const ConnectedCatalog& cat) {
  std::vector<Crossing> out;
  for (VertexMask h : cat.sets) {
    std::vector<VertexMask> proper;
    for (VertexMask x : cuts(cat, h))
      if (x != h) proper.push_back(x);
    for (VertexMask x : proper)
      for (VertexMask y : proper) {
        VertexMask p0 = x, p2 = h & ~x, p1 = y, p3 = h & ~y;
        if (x >= p2 || y >= p3 || x == y || x == p3) continue;
        if ((p0 & p1) && (p1 & p2) && (p2 & p3) && (p3 & p0)) out.push_back({{p0, p1, p2, p3}});
      }
  }
  return out;
}

}  // namespace

LatticeCriterion pg_lattice_criterion(const Graph& g, int bound) {
  LatticeCriterion r;
  r.is_block_graph = is_block_graph(g);
  r.has_k4 = has_k4(g);
  r.is_lattice = r.is_block_graph && !r.has_k4;
  ConnectedCatalog cat;
  try {
    cat = connected_catalog(g);
  } catch (const Error&) {
    r.witness = "catalog too large for direct confirmation";
    return r;
  }
  ClosureSpace space = graph_closure_space(cat);
  int n = cat.size();
  if (r.is_lattice) {
    if (n > bound) {
      r.witness = "catalog exceeds the enumeration bound";
      return r;
    }
    auto clop = enumerate_clopen(space, bound);
    auto reg = regular_closed_sets(space, bound);
    r.clop_equals_reg = clop == reg;
    try {
      FiniteLattice::from_sets(clop);
      r.clop_is_lattice = true;
    } catch (const Error&) {
      r.clop_is_lattice = false;
    }
    return r;
  }
  for (const Crossing& c : crossings(cat)) {
    ElementSet a[4];
    bool all_clopen = true;
    for (int i = 0; i < 4; ++i) {
      for (int k = 0; k < n; ++k)
        if (is_subset(cat.sets[k], c.p[i]) && (cat.sets[k] & c.p[(i + 1) % 4])) a[i].insert(k);
      all_clopen = all_clopen && space.is_closed(a[i]) && space.is_open(a[i]);
    }
    if (!all_clopen) continue;
    ElementSet lower = a[0] | a[2];
    ElementSet upper = (a[1] | a[3]).complement(n);
    if (find_clopen_between(space, lower, upper)) continue;
    r.clop_is_lattice = false;
    ElementSet reg = space.closure(space.interior(upper));
    r.clop_equals_reg = space.is_open(reg);
    r.crossing.assign(c.p, c.p + 4);
    std::ostringstream os;
    os << "P0=" << g.format(c.p[0]) << " P1=" << g.format(c.p[1]) << " P2=" << g.format(c.p[2])
       << " P3=" << g.format(c.p[3]) << "; no clopen set lies between a0∪a2 and the complement of a1∪a3";
    r.witness = os.str();
    return r;
  }
  r.witness = "no crossing certificate found";
  return r;
}

// ---------------------------------------------------- pseudo-ultrafilters

bool PseudoUltrafilter::contains(VertexMask x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

namespace {

struct CutTriples {
  std::vector<VertexMask> cut;
  std::vector<std::array<int, 3>> triples;  // X, Y, Z = X ⊔ Y, as cut indices
};

CutTriples cut_triples(const ConnectedCatalog& cat, VertexMask h) {
  CutTriples ct;
  ct.cut = cuts(cat, h);
  std::unordered_map<VertexMask, int> at;
  for (int i = 0; i < static_cast<int>(ct.cut.size()); ++i) at[ct.cut[i]] = i;
  for (int i = 0; i < static_cast<int>(ct.cut.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(ct.cut.size()); ++j) {
      if (ct.cut[i] & ct.cut[j]) continue;
      auto it = at.find(ct.cut[i] | ct.cut[j]);
      if (it != at.end()) ct.triples.push_back({i, j, it->second});
    }
  return ct;
}

bool clauses_hold(const CutTriples& ct, std::uint64_t mu) {
  for (auto [x, y, z] : ct.triples) {
    bool ix = mu >> x & 1, iy = mu >> y & 1, iz = mu >> z & 1;
    if (ix && iy && !iz) return false;
    if (!ix && !iy && iz) return false;
  }
  return true;
}

}  // namespace

bool is_pseudo_ultrafilter(const ConnectedCatalog& cat, const PseudoUltrafilter& mu) {
  VertexMask h = mu.host;
  CutTriples ct = cut_triples(cat, h);
  if (ct.cut.size() > 64) throw Error(ErrorCode::TooManyCuts, "too many cuts");
  std::uint64_t bits = 0;
  for (VertexMask x : mu.members) {
    auto it = std::find(ct.cut.begin(), ct.cut.end(), x);
    if (it == ct.cut.end()) return false;
    bits |= std::uint64_t{1} << (it - ct.cut.begin());
  }
  if (!mu.contains(h)) return false;
  for (VertexMask x : ct.cut)
    if (x != h && mu.contains(x) == mu.contains(h & ~x)) return false;
  return clauses_hold(ct, bits);
}

std::vector<PseudoUltrafilter> pseudo_ultrafilters(const ConnectedCatalog& cat, VertexMask h) {
  CutTriples ct = cut_triples(cat, h);
  std::unordered_map<VertexMask, int> at;
  for (int i = 0; i < static_cast<int>(ct.cut.size()); ++i) at[ct.cut[i]] = i;
  std::vector<std::pair<int, int>> pairs;
  int top = at.at(h);
  for (int i = 0; i < static_cast<int>(ct.cut.size()); ++i) {
    VertexMask x = ct.cut[i], rest = h & ~x;
    if (x != h && x < rest) pairs.push_back({i, at.at(rest)});
  }
  if (static_cast<int>(pairs.size()) > kMaxCutPairs)
    throw Error(ErrorCode::TooManyCuts, std::to_string(pairs.size()) + " complementary cut pairs");
  std::vector<PseudoUltrafilter> out;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << pairs.size()); ++choice) {
    std::uint64_t mu = std::uint64_t{1} << top;
    for (size_t k = 0; k < pairs.size(); ++k)
      mu |= std::uint64_t{1} << (choice >> k & 1 ? pairs[k].second : pairs[k].first);
    if (!clauses_hold(ct, mu)) continue;
    PseudoUltrafilter p;
    p.host = h;
    for (int i = 0; i < static_cast<int>(ct.cut.size()); ++i)
      if (mu >> i & 1) p.members.push_back(ct.cut[i]);
    std::sort(p.members.begin(), p.members.end());
    out.push_back(std::move(p));
  }
  return out;
}

PseudoUltrafilter conjugate(const ConnectedCatalog& cat, const PseudoUltrafilter& mu) {
  PseudoUltrafilter t;
  t.host = mu.host;
  for (VertexMask x : cuts(cat, mu.host))
    if (x == mu.host || !mu.contains(x)) t.members.push_back(x);
  std::sort(t.members.begin(), t.members.end());
  return t;
}

ElementSet j_of_mu(const ConnectedCatalog& cat, const PseudoUltrafilter& mu) {
  ElementSet j;
  for (int i = 0; i < cat.size(); ++i) {
    VertexMask x = cat.sets[i];
    if (!is_subset(x, mu.host)) continue;
    bool meets = false;
    for (VertexMask c : coco(cat, x, mu.host)) meets = meets || mu.contains(c);
    if (!meets) j.insert(i);
  }
  return j;
}

std::vector<CjiEntry> cji_from_pseudo_ultrafilters(const ConnectedCatalog& cat) {
  ClosureSpace space = graph_closure_space(cat);
  std::vector<CjiEntry> out;
  for (VertexMask h : cat.sets)
    for (auto& mu : pseudo_ultrafilters(cat, h)) {
      CjiEntry e;
      e.j = j_of_mu(cat, mu);
      e.closure = space.closure(e.j);
      e.mu = std::move(mu);
      out.push_back(std::move(e));
    }
  return out;
}

std::optional<DiamondWitness> find_contractible_diamond(const Graph& g) {
  if (g.size() > 10) throw Error(ErrorCode::TooLarge, "diamond search is limited to 10 vertices");
  ConnectedCatalog cat = connected_catalog(g);
  const auto& s = cat.sets;
  for (VertexMask x : s)
    for (VertexMask y : s) {
      if (!g.touches(x, y)) continue;
      for (VertexMask u : s) {
        if ((u & (x | y)) || !g.touches(u, x) || !g.touches(u, y)) continue;
        for (VertexMask v : s) {
          if ((v & (x | y | u)) || !g.touches(v, x) || !g.touches(v, y)) continue;
          if (g.touches(u, v)) continue;
          return DiamondWitness{x, y, u, v};
        }
      }
    }
  return std::nullopt;
}

// ------------------------------------------------------------ certificates

bool Certificate::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

VertexMask parse_digits(const std::string& s) {
  VertexMask m = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "bad vertex digit in '" + s + "'");
    m |= 1u << (c - '0');
  }
  return m;
}

std::string table_checksum(const std::vector<VertexMask>& sets) {
  std::vector<VertexMask> sorted(sets);
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t h = 1469598103934665603ull;
  for (VertexMask m : sorted)
    for (int k = 0; k < 4; ++k) {
      h ^= (m >> (8 * k)) & 0xff;
      h *= 1099511628211ull;
    }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace {

std::vector<VertexMask> masks(const std::vector<const char*>& names) {
  std::vector<VertexMask> out;
  for (const char* n : names) out.push_back(parse_digits(n));
  return out;
}

// The set v for K3,3−e (boxed table entries) and its complement in so(H).
const std::vector<const char*> kK33eV = {
    "1",    "3",    "5",    "01",   "03",   "12",    "34",    "013",
    "123",  "125",  "134",  "145",  "235",  "345",   "0123",  "0134",
    "0145", "0235", "1235", "1345", "12345", "01345", "01235", "012345"};

const std::vector<const char*> kK33eVc = {
    "0",    "2",    "4",    "14",   "23",   "25",    "45",    "012",
    "014",  "023",  "034",  "124",  "234",  "245",   "0124",  "0125",
    "0234", "0345", "1234", "1245", "2345", "01234", "01245", "02345"};

// Boxed entries of the K7 table, column pairs read left to right.
const std::vector<const char*> kK7U = {
    // singletons and 6-sets
    "0", "3", "5", "023456", "013456", "012356", "012345",
    // pairs and 5-sets
    "01", "02", "03", "04", "05", "06", "03456",
    "15", "23", "02456", "02356", "02345", "01356", "01346",
    "34", "35", "56", "01345", "01245", "01236", "01235",
    // triples and 4-sets
    "012", "013", "014", "015", "023", "2345", "1356",
    "025", "026", "034", "035", "036", "045", "046",
    "056", "135", "0456", "0356", "0346", "0345", "0256",
    "235", "0245", "0236", "0235", "0234", "0156", "0145",
    "345", "356", "0136", "0135", "0134", "0125", "0123",
    "0123456"};

// Asterisked entries: each with a split into members of u and a split outside tcl(u).
struct Starred {
  const char* set;
  const char* in[2];
  const char* out[2];
};
const std::vector<Starred> kK7Starred = {
    {"01234", {"012", "34"}, {"13", "024"}}, {"1235", {"15", "23"}, {"13", "25"}},
    {"1345", {"15", "34"}, {"13", "45"}},    {"02346", {"23", "046"}, {"36", "024"}},
    {"01256", {"012", "56"}, {"25", "016"}}, {"2356", {"23", "56"}, {"25", "36"}},
    {"01456", {"014", "56"}, {"45", "016"}}, {"3456", {"34", "56"}, {"36", "45"}}};

const char* kK33eChecksum = "7ff0862f57dab739";
const char* kK7Checksum = "25224942387acfdc";

std::string fmt_list(const Graph& g, const std::vector<VertexMask>& ms) {
  std::string s;
  for (size_t i = 0; i < ms.size(); ++i) s += (i ? "," : "") + g.format(ms[i]);
  return s;
}

Graph k7_digits() {
  std::vector<std::string> l;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 7; ++i) {
    l.push_back(std::to_string(i));
    for (int j = i + 1; j < 7; ++j) e.push_back({i, j});
  }
  return Graph(GroundSet(l), e);
}

// No split of h into two members of s.
bool no_two_block_split(const ConnectedCatalog& cat, const ElementSet& s, VertexMask h) {
  for (int i = 0; i < cat.size(); ++i) {
    VertexMask x = cat.sets[i];
    if (x == h || !is_subset(x, h) || !s.contains(i)) continue;
    int j = cat.find(h & ~x);
    if (j >= 0 && s.contains(j)) return false;
  }
  return true;
}

}  // namespace

std::vector<VertexMask> k33e_v() { return masks(kK33eV); }
std::vector<VertexMask> k33e_v_complement() { return masks(kK33eVc); }
std::vector<VertexMask> k7_u() { return masks(kK7U); }

Certificate certify_k33e() {
  Certificate c;
  Graph g = graphs::k33_minus_e();
  ConnectedCatalog cat = connected_catalog(g);
  ClosureSpace space = graph_closure_space(cat);
  int n = cat.size();
  VertexMask h = g.all();
  int hi = cat.find(h);
  auto vm = k33e_v(), vcm = k33e_v_complement();
  c.checksum = table_checksum(vm);
  c.checks.push_back({"table checksum", c.checksum == kK33eChecksum, c.checksum});

  bool all_connected = true;
  for (VertexMask m : vm) all_connected = all_connected && cat.find(m) >= 0;
  std::set<VertexMask> distinct(vm.begin(), vm.end());
  c.checks.push_back({"v has 24 connected members", all_connected && distinct.size() == 24,
                      std::to_string(distinct.size()) + " members"});
  if (!all_connected) return c;
  ElementSet v = cat.lift(vm);

  bool partition = true;
  for (VertexMask m : vcm) partition = partition && cat.find(m) >= 0;
  if (partition) {
    ElementSet vc = cat.lift(vcm);
    partition = !vc.intersects(v) && (vc | v) == ElementSet::full(n);
  }
  c.checks.push_back({"listed complement matches", partition,
                      std::to_string(n) + " connected subsets in total"});

  c.checks.push_back({"v is open", space.is_open(v), ""});
  c.checks.push_back({"v is not closed", !space.is_closed(v), ""});

  ElementSet cl = space.closure(v);
  ElementSet extra = cl - v;
  int i1234 = cat.find(parse_digits("1234"));
  bool split = g.touches(parse_digits("12"), parse_digits("34")) &&
               v.contains(cat.find(parse_digits("12"))) && v.contains(cat.find(parse_digits("34")));
  c.checks.push_back({"tcl(v) = v plus 1234", extra == ElementSet::singleton(i1234) && split,
                      "added: " + cat.ground.format(extra)});

  bool out_split = !cl.contains(cat.find(parse_digits("14"))) &&
                   !cl.contains(cat.find(parse_digits("23"))) &&
                   (parse_digits("14") | parse_digits("23")) == parse_digits("1234");
  c.checks.push_back(
      {"v is regular open", space.interior(cl) == v && out_split, "1234 = 14 + 23 outside tcl(v)"});

  Verdict mn = is_minimal_neighborhood(space, v, hi);
  // The explicit coverings of the argument: {X, H∖X} when H∖X lies outside v, else these.
  bool explicit_ok = true;
  std::vector<std::pair<const char*, std::vector<const char*>>> special = {
      {"123", {"123", "0", "45"}},
      {"134", {"134", "0", "25"}},
      {"1235", {"1235", "0", "4"}},
      {"1345", {"1345", "0", "2"}}};
  for (int x : v.members()) {
    VertexMask xm = cat.sets[x];
    if (xm == h) continue;
    ElementSet cover;
    auto it = std::find_if(special.begin(), special.end(),
                           [&](const auto& s) { return parse_digits(s.first) == xm; });
    if (it != special.end()) {
      cover = cat.lift(masks(it->second));
    } else {
      int rest = cat.find(h & ~xm);
      if (rest < 0) {
        explicit_ok = false;
        continue;
      }
      cover = ElementSet{x, rest};
    }
    VertexMask u = cat.union_of(cover);
    int blocks = 0;
    cover.for_each([&](int k) { blocks += popcount(cat.sets[k]); });
    explicit_ok = explicit_ok && u == h && blocks == popcount(h) && (cover & v) == ElementSet::singleton(x);
  }
  c.checks.push_back({"v is a minimal neighborhood of H", mn.value && explicit_ok, mn.diagnostic});

  c.checks.push_back({"v is join-irreducible among regular open sets", no_two_block_split(cat, cl, h), ""});
  c.checks.push_back({"v contains no clopen neighborhood of H",
                      !find_clopen_between(space, ElementSet::singleton(hi), v).has_value(), ""});
  return c;
}

Certificate certify_k7() {
  Certificate c;
  Graph g = k7_digits();
  ConnectedCatalog cat = connected_catalog(g);
  ClosureSpace space = graph_closure_space(cat);
  VertexMask top = g.all();
  int gi = cat.find(top);
  auto um = k7_u();
  c.checksum = table_checksum(um);
  c.checks.push_back({"table checksum", c.checksum == kK7Checksum, c.checksum});
  std::set<VertexMask> distinct(um.begin(), um.end());
  c.checks.push_back({"u has 64 members", distinct.size() == 64 && um.size() == 64,
                      std::to_string(distinct.size()) + " members"});
  ElementSet u = cat.lift(um);

  bool exchange = true;
  std::string bad;
  for (VertexMask x = 1; x < top; ++x)
    if (u.contains(cat.find(x)) == u.contains(cat.find(top & ~x))) {
      exchange = false;
      bad = g.format(x);
      break;
    }
  c.checks.push_back({"X in u iff its complement is not", exchange, bad});

  c.checks.push_back({"u is open", space.is_open(u), ""});

  ElementSet a = space.closure(u);
  std::vector<VertexMask> starred;
  bool in_splits = true, out_splits = true;
  for (const auto& s : kK7Starred) {
    VertexMask m = parse_digits(s.set);
    starred.push_back(m);
    VertexMask x = parse_digits(s.in[0]), y = parse_digits(s.in[1]);
    in_splits = in_splits && !(x & y) && (x | y) == m && u.contains(cat.find(x)) &&
                u.contains(cat.find(y));
    x = parse_digits(s.out[0]);
    y = parse_digits(s.out[1]);
    out_splits = out_splits && !(x & y) && (x | y) == m && !a.contains(cat.find(x)) &&
                 !a.contains(cat.find(y));
  }
  ElementSet expected = u | cat.lift(starred);
  c.checks.push_back({"tcl(u) adds exactly the 8 starred sets", a == expected && in_splits,
                      "added: " + cat.ground.format(a - u)});
  c.checks.push_back({"u is regular open", space.interior(a) == u && out_splits, ""});

  VertexMask q0 = parse_digits("012"), q1 = parse_digits("34"), q2 = parse_digits("56");
  bool qs = u.contains(cat.find(q0)) && u.contains(cat.find(q1)) && u.contains(cat.find(q2)) &&
            !(q0 & q1) && !(q0 & q2) && !(q1 & q2) && (q0 | q1 | q2) == top;
  c.checks.push_back({"Q0, Q1, Q2 lie in u and partition G", qs, fmt_list(g, {q0, q1, q2})});

  Verdict mn = is_minimal_neighborhood(space, u, gi);
  c.checks.push_back({"u is a minimal neighborhood of G",
                      mn.value && no_two_block_split(cat, u, top), mn.diagnostic});

  bool direct = !u.contains(cat.find(q1 | q2)) && !u.contains(cat.find(q0 | q2)) &&
                !u.contains(cat.find(q0 | q1));
  bool none = !find_clopen_between(space, ElementSet::singleton(gi), u).has_value();
  c.checks.push_back({"u contains no clopen neighborhood of G", none && direct, ""});
  return c;
}

}  // namespace regcl
