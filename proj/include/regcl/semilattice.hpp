#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regcl/closure_space.hpp"
#include "regcl/lattice.hpp"

namespace regcl {

class JoinSemilattice {
 public:
  JoinSemilattice() = default;
  // Throws InvalidSemilattice when some pair lacks a least upper bound.
  static JoinSemilattice from_order(GroundSet ground, const Order& ord);
  // Throws InvalidSemilattice unless the table is idempotent, commutative and associative.
  static JoinSemilattice from_join_table(GroundSet ground, const std::vector<std::vector<int>>& join);

  int size() const { return ground_.size(); }
  const GroundSet& ground() const { return ground_; }
  const Order& order() const { return order_; }
  bool leq(int x, int y) const { return order_.leq(x, y); }
  int join(int x, int y) const { return join_[x][y]; }
  int join_of(const ElementSet& s) const;  // s nonempty
  ElementSet down(int p) const { return order_.down(p); }
  ElementSet strictly_down(int p) const;
  const std::vector<std::vector<int>>& join_table() const { return join_; }

 private:
  GroundSet ground_;
  Order order_;
  std::vector<std::vector<int>> join_;
};

// Nonempty subsets of an m-letter alphabet under union, labels like "ab".
JoinSemilattice generate_sm(int m);
// The five-element subsemilattice {b0 < a0, a1; b1; 1} used as a non-lattice example.
JoinSemilattice psub_srs();

// Rules ({x, y}, x∨y) for incomparable pairs; minimal coverings come from joins below p.
ClosureSpace semilattice_closure_space(const JoinSemilattice& s);

bool is_ideal(const JoinSemilattice& s, const ElementSet& x);
// All ideals, the empty one included.
std::vector<ElementSet> ideals(const JoinSemilattice& s);
std::vector<ElementSet> maximal_proper_ideals_below(const JoinSemilattice& s, int p);
std::vector<ElementSet> semilattice_minimal_neighborhoods(const JoinSemilattice& s, int p);
std::vector<ElementSet> semilattice_cji(const JoinSemilattice& s);

struct LowerCoverCriteria {
  bool i = false;    // at most n lower covers in the ideal lattice
  bool ii = false;   // S⇊p is a union of n ideals
  bool iii = false;  // S⇊p is a union of n lower covers
  bool iv = false;   // no (n+1)-subset of S⇊p joining pairwise to p
  bool agree() const { return i == ii && ii == iii && iii == iv; }
};
LowerCoverCriteria lower_cover_criteria(const JoinSemilattice& s, int p, int n);

struct ClopEquivalences {
  bool clop_is_lattice = false;
  bool complete_sublattice = false;
  bool clop_equals_reg = false;
  bool closure_of_open_is_open = false;
  std::string witness;
  bool agree() const {
    return clop_is_lattice == complete_sublattice && complete_sublattice == clop_equals_reg &&
           clop_equals_reg == closure_of_open_is_open;
  }
};
ClopEquivalences clop_lattice_equivalences(const JoinSemilattice& s, int bound = kDefaultBound);

// Random semilattice: a join-closed subset of a random lattice or of some S_m.
JoinSemilattice random_semilattice(std::uint64_t seed, int max_size);

}  // namespace regcl
