#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "regcl/closure_space.hpp"
#include "regcl/lattice.hpp"

namespace regcl {

using VertexMask = std::uint32_t;
inline constexpr int kMaxGraphVertices = 31;

class Graph {
 public:
  Graph() = default;
  // Throws InvalidGraph on loops or out-of-range endpoints.
  Graph(GroundSet vertices, const std::vector<std::pair<int, int>>& edges);
  static Graph from_labels(const std::vector<std::string>& vertices,
                           const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return vertices_.size(); }
  const GroundSet& vertices() const { return vertices_; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
  VertexMask neighbors(int v) const { return adj_[v]; }
  VertexMask all() const { return size() == 32 ? ~0u : ((1u << size()) - 1); }
  std::vector<std::pair<int, int>> edges() const;

  bool connected(VertexMask m) const;  // the empty set counts as connected
  std::vector<VertexMask> components(VertexMask m) const;
  // U ∼ V: disjoint with an edge between them.
  bool touches(VertexMask u, VertexMask v) const;
  Graph induced(VertexMask m) const;
  std::string format(VertexMask m) const;

 private:
  GroundSet vertices_;
  std::vector<VertexMask> adj_;
};

namespace graphs {
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph diamond();
Graph star(int leaves);
Graph k33_minus_e();  // vertices 0..5
Graph empty(int n);
// "K4", "C5", "P3", "diamond", "star3", "K33_minus_e", "E3"
Graph by_name(const std::string& name);
// One representative per isomorphism class, vertices 0..n-1.
std::vector<Graph> all_up_to_iso(int n);
}  // namespace graphs

// Nonempty connected vertex subsets, ordered by (size, mask).
struct ConnectedCatalog {
  Graph graph;
  std::vector<VertexMask> sets;
  std::unordered_map<VertexMask, int> index;
  GroundSet ground;

  int find(VertexMask m) const;  // -1 when absent
  int size() const { return static_cast<int>(sets.size()); }
  VertexMask mask(int i) const { return sets[i]; }
  ElementSet lift(const std::vector<VertexMask>& ms) const;
  ElementSet below(VertexMask h) const;  // catalog members contained in h
  VertexMask union_of(const ElementSet& s) const;
};
// Throws TooManyVertices beyond 31 vertices or 128 connected sets.
ConnectedCatalog connected_catalog(const Graph& g);

// Partitions of h into connected blocks, as catalog sets.
std::vector<ElementSet> connected_partitions(const ConnectedCatalog& cat, VertexMask h);
// Disjoint-union closure; coverings come from connected partitions.
ClosureSpace graph_closure_space(const ConnectedCatalog& cat);

bool is_block_graph(const Graph& g);
bool has_k4(const Graph& g);
// Oracle for is_block_graph: no induced cycle of length ≥ 4 and no induced diamond.
bool block_graph_by_forbidden_subgraphs(const Graph& g);

struct LatticeCriterion {
  bool is_block_graph = false;
  bool has_k4 = false;
  bool is_lattice = false;  // block graph without 4-cliques
  // Direct confirmation, when the catalog is small enough.
  std::optional<bool> clop_is_lattice;
  std::optional<bool> clop_equals_reg;
  std::vector<VertexMask> crossing;  // P0, P1, P2, P3 when not a lattice
  std::string witness;
};
LatticeCriterion pg_lattice_criterion(const Graph& g, int bound = kDefaultBound);

std::vector<VertexMask> cuts(const ConnectedCatalog& cat, VertexMask h);
std::vector<VertexMask> coco(const ConnectedCatalog& cat, VertexMask x, VertexMask h);

struct PseudoUltrafilter {
  VertexMask host = 0;
  std::vector<VertexMask> members;  // sorted
  bool contains(VertexMask x) const;
};
inline constexpr int kMaxCutPairs = 20;
// Throws TooManyCuts when the proper cuts exceed kMaxCutPairs complementary pairs.
std::vector<PseudoUltrafilter> pseudo_ultrafilters(const ConnectedCatalog& cat, VertexMask h);
bool is_pseudo_ultrafilter(const ConnectedCatalog& cat, const PseudoUltrafilter& mu);
PseudoUltrafilter conjugate(const ConnectedCatalog& cat, const PseudoUltrafilter& mu);
ElementSet j_of_mu(const ConnectedCatalog& cat, const PseudoUltrafilter& mu);

struct CjiEntry {
  PseudoUltrafilter mu;
  ElementSet j;
  ElementSet closure;  // tcl(j(μ))
};
std::vector<CjiEntry> cji_from_pseudo_ultrafilters(const ConnectedCatalog& cat);

struct DiamondWitness {
  VertexMask x = 0, y = 0, u = 0, v = 0;  // diagonal {x, y}
};
std::optional<DiamondWitness> find_contractible_diamond(const Graph& g);
inline bool diamond_contractible_free(const Graph& g) {
  return !find_contractible_diamond(g).has_value();
}

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};
struct Certificate {
  std::vector<Check> checks;
  bool all_passed() const;
  std::string checksum;
};
Certificate certify_k33e();
Certificate certify_k7();

// Table data used by the certificates, as vertex masks.
std::vector<VertexMask> k33e_v();
std::vector<VertexMask> k33e_v_complement();
std::vector<VertexMask> k7_u();
VertexMask parse_digits(const std::string& s);
std::string table_checksum(const std::vector<VertexMask>& sets);

}  // namespace regcl
