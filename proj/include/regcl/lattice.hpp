#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "regcl/closure_space.hpp"

namespace regcl {

using Bits = boost::dynamic_bitset<uint64_t>;

inline constexpr int kMaxLatticeSize = 6000;

class FiniteLattice {
 public:
  FiniteLattice() = default;
  // Throws InvalidLattice with the first violation found.
  static FiniteLattice from_leq(const std::vector<std::vector<bool>>& leq,
                                std::vector<std::string> labels = {});
  // Sets ordered by inclusion; they must form a lattice under inclusion.
  static FiniteLattice from_sets(const std::vector<ElementSet>& sets,
                                 std::vector<std::string> labels = {});
  static FiniteLattice chain(int n);

  int size() const { return n_; }
  bool leq(int i, int j) const { return up_[i].test(j); }
  bool lt(int i, int j) const { return i != j && leq(i, j); }
  int join(int i, int j) const { return join_[static_cast<size_t>(i) * n_ + j]; }
  int meet(int i, int j) const { return meet_[static_cast<size_t>(i) * n_ + j]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const Bits& up(int i) const { return up_[i]; }
  const Bits& down(int i) const { return down_[i]; }
  int join_all(const std::vector<int>& xs) const;
  int meet_all(const std::vector<int>& xs) const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  bool has_ortho() const { return ortho_.has_value(); }
  int ortho(int i) const { return (*ortho_)[i]; }
  const std::optional<std::vector<int>>& ortho_map() const { return ortho_; }
  // Throws InvalidOrthoposet.
  void set_ortho(std::vector<int> ortho);

  std::vector<int> lower_covers(int i) const;
  std::vector<int> upper_covers(int i) const;
  FiniteLattice dual() const;
  std::vector<std::vector<bool>> leq_matrix() const;

 private:
  int n_ = 0;
  int bottom_ = -1, top_ = -1;
  std::vector<Bits> up_, down_;
  std::vector<int> join_, meet_;
  std::vector<std::string> labels_;
  std::optional<std::vector<int>> ortho_;
};

struct ValidationReport {
  bool order_ok = false;
  bool lattice_ok = false;
  bool ortho_ok = true;
  std::vector<std::string> violations;
  bool valid() const { return order_ok && lattice_ok && ortho_ok; }
};

// Checks an arbitrary relation matrix, optional operation tables and ortho map.
ValidationReport validate_lattice(const std::vector<std::vector<bool>>& leq,
                                  const std::vector<int>& ortho = {},
                                  const std::vector<std::vector<int>>& join_table = {},
                                  const std::vector<std::vector<int>>& meet_table = {});
ValidationReport validate_lattice(const FiniteLattice& L);
// Orthocomplementation axioms on a lattice.
std::vector<std::string> ortho_violations(const FiniteLattice& L, const std::vector<int>& ortho);

std::vector<int> join_irreducibles(const FiniteLattice& L);
std::vector<int> meet_irreducibles(const FiniteLattice& L);

struct ArrowReport {
  std::vector<int> ji, mi;
  std::vector<int> lower_cover;  // p* per index of ji
  std::vector<int> upper_cover;  // u* per index of mi
  std::vector<std::pair<int, int>> up_arrows;    // (p, u): p ↗ u
  std::vector<std::pair<int, int>> down_arrows;  // (u, p): u ↘ p
};
ArrowReport irreducibles_and_arrows(const FiniteLattice& L);

struct DGraph {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;         // via arrows
  std::vector<std::pair<int, int>> direct_edges;  // via the defining formula
  bool agree() const { return edges == direct_edges; }
};
DGraph join_dependency(const FiniteLattice& L);

struct Boundedness {
  bool lower_bounded = false;
  bool upper_bounded = false;
  bool bounded = false;
  bool arrow_and_direct_agree = true;
  std::vector<int> cycle;  // a D-cycle when not lower bounded (or dual cycle)
};
Boundedness is_bounded(const FiniteLattice& L);

struct Triple {
  int x = -1, y = -1, z = -1;
};
struct SdReport {
  bool sd_join = true;
  bool sd_meet = true;
  bool sd = true;
  std::optional<Triple> join_witness;  // x∨z = y∨z but (x∧y)∨z differs
  std::optional<Triple> meet_witness;  // x∧z = y∧z but (x∨y)∧z differs
};
SdReport semidistributivity(const FiniteLattice& L);

struct RsdResult {
  bool holds = true;
  // Witness (a_0, ..., a_m) and c with the premise true and a_0 ≰ c.
  std::vector<int> a;
  int c = -1;
};
RsdResult satisfies_rsd(const FiniteLattice& L, int m);

bool is_pseudocomplemented(const FiniteLattice& L);
bool is_distributive(const FiniteLattice& L);
bool is_complemented(const FiniteLattice& L);

// Sublattice generated by gens (as sorted element indices).
std::vector<int> generated_sublattice(const FiniteLattice& L, const std::vector<int>& gens);
FiniteLattice induced(const FiniteLattice& L, const std::vector<int>& elems);
// An isomorphism A → B, if any.
std::optional<std::vector<int>> isomorphism(const FiniteLattice& A, const FiniteLattice& B);
bool is_isomorphic(const FiniteLattice& A, const FiniteLattice& B);
// Canonical string certificate, invariant under isomorphism (small lattices).
std::string canonical_certificate(const FiniteLattice& L);

struct Embedding {
  std::vector<int> image;  // pattern element -> element of L
};
std::optional<Embedding> find_sublattice_copy(const FiniteLattice& L, const FiniteLattice& pattern);

struct DmCompletion {
  FiniteLattice lattice;
  std::vector<int> embedding;  // K element -> lattice element
  std::vector<ElementSet> cuts;
};
// K given as a poset by its order matrix; |K| ≤ kMaxElements.
DmCompletion dedekind_macneille(const Order& K, const std::vector<std::string>& labels = {});
bool is_dm_completion(const FiniteLattice& L, const std::vector<int>& K);

struct TightnessReport {
  bool tight = true;
  bool joins_ok = true;
  bool meets_ok = true;
  std::string witness;
};
// Exact test for finite lattices.
TightnessReport is_tight(const FiniteLattice& L, const std::vector<int>& K);
// Direct sweep over subsets X ⊆ K with |X| ≤ cap (cap < 0: all subsets).
TightnessReport is_tight_bruteforce(const FiniteLattice& L, const std::vector<int>& K, int cap);

FiniteLattice parallel_sum(const FiniteLattice& A, const FiniteLattice& B);

// Built-in small lattices.
namespace lattices {
FiniteLattice m3();
FiniteLattice m4();  // with its orthocomplementation
FiniteLattice l1();
FiniteLattice l3();
FiniteLattice l4();
FiniteLattice benzene();  // with its orthocomplementation
FiniteLattice boolean(int atoms);
FiniteLattice two_atom_boolean();  // with its orthocomplementation
FiniteLattice by_name(const std::string& name);  // "M3", "L1", "L1op", ...
std::vector<std::string> names();
}  // namespace lattices

// Reg(P, φ) as a lattice of sets, with orthocomplement and clopen flags.
struct RegLattice {
  std::vector<ElementSet> sets;
  FiniteLattice lattice;
  std::vector<bool> clopen;
  int index_of(const ElementSet& s) const;  // -1 when absent
  std::vector<int> clopen_indices() const;
};
RegLattice enumerate_regular_closed(const ClosureSpace& space, int bound = kDefaultBound);

// Orthoposet → closure space whose clopen sets are the Z(p).
struct OrthoposetSpace {
  ClosureSpace space;
  std::vector<ElementSet> z;  // L element -> Z(p)
};
OrthoposetSpace orthoposet_space(const FiniteLattice& L);

std::string to_dot(const FiniteLattice& L, const std::string& name = "L");

}  // namespace regcl
