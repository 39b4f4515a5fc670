#pragma once

#include <functional>
#include <optional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "regcl/element_set.hpp"
#include "regcl/error.hpp"

namespace regcl {

class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);
  static GroundSet numbered(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  // -1 when absent.
  int find(std::string_view label) const;
  int index(std::string_view label) const;  // throws UnknownName

  ElementSet set_of(const std::vector<std::string>& labels) const;
  ElementSet full() const { return ElementSet::full(size()); }
  std::vector<std::string> names(const ElementSet& s) const;
  // "{a,b,c}"
  std::string format(const ElementSet& s) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

// Partial order as a boolean matrix; validated on construction.
class Order {
 public:
  Order() = default;
  // Throws InvalidOrder (reflexivity), NotAntisymmetric or NotTransitive.
  explicit Order(std::vector<std::vector<bool>> leq);
  // Reflexive-transitive closure of the given pairs (i below j).
  static Order from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  static Order antichain(int n);
  static Order by_inclusion(const std::vector<ElementSet>& sets);

  int size() const { return static_cast<int>(leq_.size()); }
  bool leq(int i, int j) const { return leq_[i][j]; }
  ElementSet down(int p) const;
  ElementSet up(int p) const;
  // Least upper bound of x, or -1 if it does not exist.
  int supremum(const ElementSet& x) const;
  const std::vector<std::vector<bool>>& matrix() const { return leq_; }

 private:
  std::vector<std::vector<bool>> leq_;
};

struct Rule {
  ElementSet premise;
  int conclusion = 0;
};

enum class Backend { Implications, Intersections, Oracle };

class ClosureSpace {
 public:
  using OracleFn = std::function<ElementSet(const ElementSet&)>;
  using CoveringsFn = std::function<std::vector<ElementSet>(int)>;

  static ClosureSpace implications(GroundSet ground, std::vector<Rule> rules);
  static ClosureSpace intersections(GroundSet ground, std::vector<ElementSet> generators);
  static ClosureSpace oracle(GroundSet ground, OracleFn fn);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  ElementSet full() const { return ground_.full(); }
  Backend backend() const { return backend_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<ElementSet>& generators() const { return generators_; }

  ElementSet closure(const ElementSet& x) const;
  ElementSet interior(const ElementSet& x) const;
  bool is_closed(const ElementSet& x) const { return closure(x) == x; }
  bool is_open(const ElementSet& x) const { return is_closed(x.complement(size())); }

  // Minimal coverings of p; uses the installed specialization when present.
  std::vector<ElementSet> minimal_coverings(int p) const;
  void set_coverings_provider(CoveringsFn fn) { coverings_ = std::move(fn); }
  bool has_coverings_provider() const { return static_cast<bool>(coverings_); }

  ElementSet set_of(const std::vector<std::string>& labels) const { return ground_.set_of(labels); }
  std::string format(const ElementSet& s) const { return ground_.format(s); }

 private:
  void check_range(const ElementSet& x) const;
  ElementSet closure_implications(const ElementSet& x) const;

  GroundSet ground_;
  Backend backend_ = Backend::Implications;
  std::vector<Rule> rules_;
  std::vector<std::vector<int>> watch_;  // rules whose premise contains an element
  std::vector<ElementSet> generators_;
  OracleFn oracle_;
  std::shared_ptr<struct OracleMemo> memo_;
  CoveringsFn coverings_;
};

inline constexpr int kDefaultBound = 24;

struct Classification {
  bool closed = false;
  bool open = false;
  bool regular_closed = false;
  bool regular_open = false;
  bool clopen = false;
};

Classification classify(const ClosureSpace& space, const ElementSet& x);
// φ(xᶜ). Regular closed whenever x is closed; an involution on Reg.
ElementSet orthogonal(const ClosureSpace& space, const ElementSet& x);

// Throws GroundTooLarge when the ground set exceeds the bound.
void check_bound(const ClosureSpace& space, int bound);

// All closed sets, in canonical order.
std::vector<ElementSet> enumerate_closed(const ClosureSpace& space, int bound = kDefaultBound);
void for_each_closed(const ClosureSpace& space, const std::function<void(const ElementSet&)>& f,
                     int bound = kDefaultBound);

// Regular closed sets, in canonical order.
std::vector<ElementSet> regular_closed_sets(const ClosureSpace& space, int bound = kDefaultBound);
std::vector<ElementSet> enumerate_clopen(const ClosureSpace& space, int bound = kDefaultBound);

// Minimal coverings via minimal hitting sets of the complements of the
// maximal closed sets avoiding p.
std::vector<ElementSet> generic_minimal_coverings(const ClosureSpace& space, int p);
// Maximal closed sets not containing p.
std::vector<ElementSet> copoints(const ClosureSpace& space, int p);

Verdict is_minimal_neighborhood(const ClosureSpace& space, const ElementSet& u, int p);
// Same criterion against a caller-supplied complete list of minimal coverings of p.
Verdict is_minimal_neighborhood(const ClosureSpace& space, const ElementSet& u, int p,
                                const std::vector<ElementSet>& coverings);
std::vector<ElementSet> minimal_neighborhoods(const ClosureSpace& space, int p,
                                              int bound = kDefaultBound);

bool has_poset_type(const ClosureSpace& space, const Order& ord);
bool has_semilattice_type(const ClosureSpace& space, const Order& ord);
bool is_convex_geometry(const ClosureSpace& space, int bound = kDefaultBound);
ElementSet extreme_points(const ClosureSpace& space, const ElementSet& a);

// A clopen b with lower ⊆ b ⊆ upper, if one exists (exhaustive search).
std::optional<ElementSet> find_clopen_between(const ClosureSpace& space, const ElementSet& lower,
                                              const ElementSet& upper);

struct SpaceWithOrder {
  ClosureSpace space;
  Order order;
};

SpaceWithOrder transitive_relation_space(int n, const std::vector<std::pair<int, int>>& e,
                                         const std::vector<std::string>& vertex_labels = {});
ClosureSpace up_closure_space(const Order& ord, const std::vector<std::string>& labels = {});

}  // namespace regcl
