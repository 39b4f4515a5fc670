#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "regcl/closure_space.hpp"
#include "regcl/lattice.hpp"

namespace regcl {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// "3", "-3/7"; throws ParseError.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);
std::string format_vector(const RationalVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);

// Exact result of A x = b, x ≥ 0.  When infeasible, y satisfies yA ≤ 0 and yb > 0.
struct LpOutcome {
  bool feasible = false;
  RationalVector x;
  RationalVector farkas;
};
LpOutcome solve_standard_form(const RationalMatrix& A, const RationalVector& b);

// Free x with F x = f and G x ≥ g.  When infeasible, farkas holds the
// multipliers (equalities first, then inequalities, the latter ≥ 0).
LpOutcome solve_free(int vars, const RationalMatrix& F, const RationalVector& f,
                     const RationalMatrix& G, const RationalVector& g);

class PointConfiguration {
 public:
  PointConfiguration() = default;
  // Throws DimensionMismatch or InvalidSpace (repeated point).
  PointConfiguration(std::vector<RationalVector> points, std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(points_.size()); }
  int dim() const { return dim_; }
  const RationalVector& point(int i) const { return points_[i]; }
  const std::vector<RationalVector>& points() const { return points_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::vector<RationalVector> subset(const ElementSet& x) const;

 private:
  int dim_ = 0;
  std::vector<RationalVector> points_;
  std::vector<std::string> labels_;
};

// Throws DimensionMismatch; X must be nonempty.
bool conv_membership(const RationalVector& p, const std::vector<RationalVector>& X);
std::optional<RationalVector> convex_coefficients(const RationalVector& p,
                                                  const std::vector<RationalVector>& X);

// conv_E(X) = conv(X) ∩ E, oracle backend.
ClosureSpace conv_e_space(const PointConfiguration& E);

bool strongly_biconvex(const PointConfiguration& E, const ElementSet& X);

// ℓ(z) = ⟨w,z⟩ + c.
struct AffineFunctional {
  RationalVector w;
  Rational c;
  Rational operator()(const RationalVector& z) const { return dot(w, z) + c; }
};
// ℓ < 0 on X and ℓ > 0 on E∖X, read off the Farkas certificate; none if the hulls meet.
std::optional<AffineFunctional> separating_functional(const PointConfiguration& E,
                                                      const ElementSet& X);
std::vector<ElementSet> strongly_biconvex_sets(const PointConfiguration& E);

class CentralArrangement {
 public:
  CentralArrangement() = default;
  // Throws InvalidArrangement (zero or parallel normals, b on a hyperplane)
  // or DimensionMismatch.
  CentralArrangement(std::vector<RationalVector> normals, RationalVector base);

  int size() const { return static_cast<int>(normals_.size()); }
  int dim() const { return static_cast<int>(base_.size()); }
  const std::vector<RationalVector>& normals() const { return normals_; }
  const RationalVector& base() const { return base_; }
  // z / ⟨z,b⟩ for every normal z.
  PointConfiguration normalized_points() const;

 private:
  std::vector<RationalVector> normals_;
  RationalVector base_;
};

// Lines through the origin of ℚ² with the given slopes.
CentralArrangement lines_arrangement(const std::vector<Rational>& slopes);
// Normals e_i - e_j (i < j) in ℚⁿ, base (n, n-1, ..., 1).
CentralArrangement braid_arrangement(int n);
// Points x ∈ ℚᵈ lifted to normals (x, 1) with base (0, ..., 0, 1).
CentralArrangement arrangement_from_points(const PointConfiguration& E);

struct RegionPoset {
  std::vector<std::vector<int>> signs;  // ±1 per hyperplane
  std::vector<ElementSet> eps;          // hyperplanes separating the region from B
  Order order;                          // inclusion of eps
  PointConfiguration points;
};
// Throws TooLarge above kMaxHyperplanes.
inline constexpr int kMaxHyperplanes = 12;
RegionPoset region_poset(const CentralArrangement& A);

struct RegionCompletion {
  RegionPoset pos;
  RegLattice reg;
  std::vector<int> embedding;  // region -> index in reg
  bool image_is_strongly_biconvex = false;  // eps ranges over all strongly bi-convex sets
  bool is_dm_completion = false;
  bool pseudocomplemented = false;
  bool pos_is_lattice = false;
  bool every_reg_strongly_biconvex = false;
};
RegionCompletion dm_of_region_poset(const CentralArrangement& A, int bound = kDefaultBound);

struct CjiEntryConvex {
  ElementSet set;
  int apex = -1;
  std::optional<AffineFunctional> functional;
};
struct CjiConvexReport {
  bool passed = true;
  std::vector<CjiEntryConvex> entries;
  std::vector<std::string> failures;
};
CjiConvexReport cji_strongly_biconvex_check(const PointConfiguration& E, int bound = kDefaultBound);

// Distinct points in ℚ² with small coordinates, 1 ≤ size ≤ max_size.
PointConfiguration random_configuration(std::uint64_t seed, int max_size);

}  // namespace regcl
