#include "regcl/convex.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace regcl {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(ErrorCode::ParseError, "not a rational: \"" + s + "\""); };
  if (s.empty()) throw bad();
  size_t slash = s.find('/');
  auto digits = [](const std::string& t, bool sign) {
    size_t k = sign && !t.empty() && (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash), den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in \"" + s + "\"");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

std::string format_vector(const RationalVector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + format_rational(v[i]);
  return out + ")";
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot of unequal lengths");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

LpOutcome solve_standard_form(const RationalMatrix& A, const RationalVector& b) {
  const int m = static_cast<int>(A.size());
  const int n = m ? static_cast<int>(A[0].size()) : 0;
  if (static_cast<int>(b.size()) != m) throw Error(ErrorCode::DimensionMismatch, "rhs length");
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
  const int cols = n + m;
  // Phase I tableau with one artificial per row; rows flipped so b ≥ 0.
  std::vector<int> flip(m, 1);
  RationalMatrix T(m, RationalVector(cols + 1));
  for (int i = 0; i < m; ++i) {
    if (b[i] < 0) flip[i] = -1;
    for (int j = 0; j < n; ++j) T[i][j] = flip[i] * A[i][j];
    T[i][n + i] = 1;
    T[i][cols] = flip[i] * b[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;
  RationalVector r(cols, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) r[j] -= T[i][j];
  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols && enter < 0; ++j)
      if (r[j] < 0) enter = j;
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][cols] / T[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw Error(ErrorCode::BackendFailure, "phase I unbounded");
    Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (int j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
    }
    Rational f = r[enter];
    for (int j = 0; j < cols; ++j) r[j] -= f * T[leave][j];
    basis[leave] = enter;
  }
  Rational obj = 0;
  for (int i = 0; i < m; ++i)
    if (basis[i] >= n) obj += T[i][cols];
  LpOutcome out;
  if (obj == 0) {
    out.feasible = true;
    out.x.assign(n, 0);
    for (int i = 0; i < m; ++i)
      if (basis[i] < n) out.x[basis[i]] = T[i][cols];
    return out;
  }
  out.farkas.resize(m);
  for (int i = 0; i < m; ++i) out.farkas[i] = flip[i] * (1 - r[n + i]);
  Rational yb = 0;
  for (int i = 0; i < m; ++i) yb += out.farkas[i] * b[i];
  bool ok = yb > 0;
  for (int j = 0; j < n && ok; ++j) {
    Rational s = 0;
    for (int i = 0; i < m; ++i) s += out.farkas[i] * A[i][j];
    ok = s <= 0;
  }
  if (!ok) throw Error(ErrorCode::BackendFailure, "Farkas certificate failed verification");
  return out;
}

LpOutcome solve_free(int vars, const RationalMatrix& F, const RationalVector& f,
                     const RationalMatrix& G, const RationalVector& g) {
  const int ne = static_cast<int>(F.size()), ni = static_cast<int>(G.size());
  const int cols = 2 * vars + ni;
  RationalMatrix A;
  RationalVector b;
  for (int i = 0; i < ne; ++i) {
    RationalVector row(cols, 0);
    for (int k = 0; k < vars; ++k) {
      row[k] = F[i][k];
      row[vars + k] = -F[i][k];
    }
    A.push_back(std::move(row));
    b.push_back(f[i]);
  }
  for (int i = 0; i < ni; ++i) {
    RationalVector row(cols, 0);
    for (int k = 0; k < vars; ++k) {
      row[k] = G[i][k];
      row[vars + k] = -G[i][k];
    }
    row[2 * vars + i] = -1;
    A.push_back(std::move(row));
    b.push_back(g[i]);
  }
  LpOutcome lp = solve_standard_form(A, b);
  if (lp.feasible) {
    RationalVector x(vars);
    for (int k = 0; k < vars; ++k) x[k] = lp.x[k] - lp.x[vars + k];
    lp.x = std::move(x);
  }
  return lp;
}

PointConfiguration::PointConfiguration(std::vector<RationalVector> points,
                                       std::vector<std::string> labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
  dim_ = points_.empty() ? 0 : static_cast<int>(points_[0].size());
  for (const auto& p : points_)
    if (static_cast<int>(p.size()) != dim_)
      throw Error(ErrorCode::DimensionMismatch, "points of different dimensions");
  for (size_t i = 0; i < points_.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (points_[i] == points_[j])
        throw Error(ErrorCode::InvalidSpace, "repeated point " + format_vector(points_[i]));
  if (labels_.empty())
    for (size_t i = 0; i < points_.size(); ++i) labels_.push_back("p" + std::to_string(i));
  if (labels_.size() != points_.size())
    throw Error(ErrorCode::DimensionMismatch, "label count differs from point count");
}

std::vector<RationalVector> PointConfiguration::subset(const ElementSet& x) const {
  std::vector<RationalVector> out;
  x.for_each([&](int i) { out.push_back(points_.at(i)); });
  return out;
}

std::optional<RationalVector> convex_coefficients(const RationalVector& p,
                                                  const std::vector<RationalVector>& X) {
  if (X.empty()) throw Error(ErrorCode::DimensionMismatch, "convex hull of the empty set");
  const size_t d = p.size();
  for (const auto& x : X)
    if (x.size() != d) throw Error(ErrorCode::DimensionMismatch, "point dimensions differ");
  RationalMatrix A(d + 1, RationalVector(X.size()));
  RationalVector b(d + 1);
  for (size_t k = 0; k < d; ++k) {
    for (size_t i = 0; i < X.size(); ++i) A[k][i] = X[i][k];
    b[k] = p[k];
  }
  for (size_t i = 0; i < X.size(); ++i) A[d][i] = 1;
  b[d] = 1;
  LpOutcome lp = solve_standard_form(A, b);
  if (!lp.feasible) return std::nullopt;
  return lp.x;
}

bool conv_membership(const RationalVector& p, const std::vector<RationalVector>& X) {
  return convex_coefficients(p, X).has_value();
}

ClosureSpace conv_e_space(const PointConfiguration& E) {
  return ClosureSpace::oracle(GroundSet(E.labels()), [E](const ElementSet& x) {
    if (x.empty()) return x;
    auto pts = E.subset(x);
    ElementSet out = x;
    for (int i = 0; i < E.size(); ++i)
      if (!x.contains(i) && conv_membership(E.point(i), pts)) out.insert(i);
    return out;
  });
}

namespace {

// λ, μ ≥ 0 with Σλ = Σμ = 1 and Σλx = Σμy.
LpOutcome common_point(const PointConfiguration& E, const ElementSet& X) {
  auto xs = E.subset(X), ys = E.subset(X.complement(E.size()));
  const int d = E.dim(), nx = static_cast<int>(xs.size()), ny = static_cast<int>(ys.size());
  RationalMatrix A(d + 2, RationalVector(nx + ny, 0));
  RationalVector b(d + 2, 0);
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < nx; ++i) A[k][i] = xs[i][k];
    for (int j = 0; j < ny; ++j) A[k][nx + j] = -ys[j][k];
  }
  for (int i = 0; i < nx; ++i) A[d][i] = 1;
  for (int j = 0; j < ny; ++j) A[d + 1][nx + j] = 1;
  b[d] = b[d + 1] = 1;
  return solve_standard_form(A, b);
}

}  // namespace

bool strongly_biconvex(const PointConfiguration& E, const ElementSet& X) {
  if (X.empty() || X == ElementSet::full(E.size())) return true;
  return !common_point(E, X).feasible;
}

std::optional<AffineFunctional> separating_functional(const PointConfiguration& E,
                                                      const ElementSet& X) {
  const int d = E.dim();
  AffineFunctional l{RationalVector(d, 0), 0};
  if (X.empty()) {
    l.c = 1;
    return l;
  }
  if (X == ElementSet::full(E.size())) {
    l.c = -1;
    return l;
  }
  LpOutcome lp = common_point(E, X);
  if (lp.feasible) return std::nullopt;
  for (int k = 0; k < d; ++k) l.w[k] = lp.farkas[k];
  l.c = (lp.farkas[d] - lp.farkas[d + 1]) / 2;
  for (int i = 0; i < E.size(); ++i) {
    Rational v = l(E.point(i));
    if (X.contains(i) ? v >= 0 : v <= 0)
      throw Error(ErrorCode::BackendFailure, "separating functional failed verification");
  }
  return l;
}

std::vector<ElementSet> strongly_biconvex_sets(const PointConfiguration& E) {
  if (E.size() > kDefaultBound) throw Error(ErrorCode::GroundTooLarge, "too many points");
  std::vector<ElementSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << E.size()); ++m) {
    ElementSet x = ElementSet::from_words(m, 0);
    if (strongly_biconvex(E, x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CentralArrangement::CentralArrangement(std::vector<RationalVector> normals, RationalVector base)
    : normals_(std::move(normals)), base_(std::move(base)) {
  const size_t d = base_.size();
  for (const auto& z : normals_) {
    if (z.size() != d) throw Error(ErrorCode::DimensionMismatch, "normal and base differ in length");
    if (std::all_of(z.begin(), z.end(), [](const Rational& q) { return q == 0; }))
      throw Error(ErrorCode::InvalidArrangement, "zero normal");
    if (dot(z, base_) == 0)
      throw Error(ErrorCode::InvalidArrangement, "base point lies on hyperplane " + format_vector(z));
  }
  auto pts = normalized_points();
  (void)pts;  // the constructor of PointConfiguration rejects parallel normals
}

PointConfiguration CentralArrangement::normalized_points() const {
  std::vector<RationalVector> pts;
  std::vector<std::string> labels;
  for (size_t i = 0; i < normals_.size(); ++i) {
    Rational s = dot(normals_[i], base_);
    RationalVector p = normals_[i];
    for (auto& q : p) q /= s;
    pts.push_back(std::move(p));
    labels.push_back("H" + std::to_string(i));
  }
  try {
    return PointConfiguration(std::move(pts), std::move(labels));
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidArrangement, "parallel normals");
  }
}

CentralArrangement lines_arrangement(const std::vector<Rational>& slopes) {
  std::vector<RationalVector> normals;
  for (const auto& s : slopes) normals.push_back({s, Rational(-1)});
  // A base point off every line: below all of them far to the right.
  Rational top = 0;
  for (const auto& s : slopes) top = std::max(top, Rational(abs(s)));
  RationalVector b{Rational(1), -(top + 1)};
  for (auto& z : normals)
    if (dot(z, b) < 0)
      for (auto& q : z) q = -q;
  return CentralArrangement(std::move(normals), std::move(b));
}

CentralArrangement braid_arrangement(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArrangement, "braid arrangement needs n >= 2");
  std::vector<RationalVector> normals;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RationalVector z(n, 0);
      z[i] = 1;
      z[j] = -1;
      normals.push_back(std::move(z));
    }
  RationalVector b(n);
  for (int i = 0; i < n; ++i) b[i] = n - i;
  return CentralArrangement(std::move(normals), std::move(b));
}

CentralArrangement arrangement_from_points(const PointConfiguration& E) {
  std::vector<RationalVector> normals;
  for (const auto& p : E.points()) {
    RationalVector z = p;
    z.push_back(1);
    normals.push_back(std::move(z));
  }
  RationalVector b(E.dim() + 1, 0);
  b.back() = 1;
  return CentralArrangement(std::move(normals), std::move(b));
}

RegionPoset region_poset(const CentralArrangement& A) {
  const int k = A.size(), d = A.dim();
  if (k > kMaxHyperplanes) throw Error(ErrorCode::TooLarge, "too many hyperplanes");
  RegionPoset out;
  out.points = A.normalized_points();
  std::vector<int> sigma;
  RationalMatrix G;
  RationalVector g;
  std::function<void()> rec = [&] {
    int i = static_cast<int>(sigma.size());
    if (i == k) {
      out.signs.push_back(sigma);
      return;
    }
    for (int s : {1, -1}) {
      RationalVector row = A.normals()[i];
      for (auto& q : row) q *= s;
      G.push_back(std::move(row));
      g.push_back(1);
      if (solve_free(d, {}, {}, G, g).feasible) {
        sigma.push_back(s);
        rec();
        sigma.pop_back();
      }
      G.pop_back();
      g.pop_back();
    }
  };
  rec();
  std::vector<std::pair<ElementSet, std::vector<int>>> regions;
  for (const auto& s : out.signs) {
    ElementSet e;
    for (int i = 0; i < k; ++i)
      if (s[i] < 0) e.insert(i);
    regions.emplace_back(e, s);
  }
  std::sort(regions.begin(), regions.end());
  out.signs.clear();
  for (auto& [e, s] : regions) {
    out.eps.push_back(e);
    out.signs.push_back(s);
  }
  out.order = Order::by_inclusion(out.eps);
  return out;
}

RegionCompletion dm_of_region_poset(const CentralArrangement& A, int bound) {
  RegionCompletion rc;
  rc.pos = region_poset(A);
  const PointConfiguration& E = rc.pos.points;
  ClosureSpace space = conv_e_space(E);
  rc.reg = enumerate_regular_closed(space, bound);
  bool all_in = true;
  for (const auto& e : rc.pos.eps) {
    rc.embedding.push_back(rc.reg.index_of(e));
    all_in = all_in && rc.embedding.back() >= 0;
  }
  rc.image_is_strongly_biconvex = rc.pos.eps == strongly_biconvex_sets(E);
  rc.is_dm_completion = all_in && is_dm_completion(rc.reg.lattice, rc.embedding);
  rc.pseudocomplemented = is_pseudocomplemented(rc.reg.lattice);
  try {
    FiniteLattice::from_sets(rc.pos.eps);
    rc.pos_is_lattice = true;
  } catch (const Error&) {
    rc.pos_is_lattice = false;
  }
  rc.every_reg_strongly_biconvex = std::all_of(rc.reg.sets.begin(), rc.reg.sets.end(),
                                               [&](const ElementSet& x) { return strongly_biconvex(E, x); });
  return rc;
}

CjiConvexReport cji_strongly_biconvex_check(const PointConfiguration& E, int bound) {
  CjiConvexReport rep;
  ClosureSpace space = conv_e_space(E);
  RegLattice reg = enumerate_regular_closed(space, bound);
  const int d = E.dim();
  auto fail = [&](const std::string& msg) {
    rep.passed = false;
    rep.failures.push_back(msg);
  };
  for (int i : join_irreducibles(reg.lattice)) {
    CjiEntryConvex entry;
    entry.set = reg.sets[i];
    const std::string name = space.format(entry.set);
    auto covers = reg.lattice.lower_covers(i);
    ElementSet lower = reg.sets[covers.at(0)];
    ElementSet diff = entry.set - lower;
    if (diff.count() != 1) {
      fail(name + ": lower cover differs by " + std::to_string(diff.count()) + " points");
      rep.entries.push_back(entry);
      continue;
    }
    entry.apex = diff.first();
    if (!strongly_biconvex(E, entry.set)) fail(name + " is not strongly bi-convex");
    if (!strongly_biconvex(E, lower)) fail(space.format(lower) + " is not strongly bi-convex");
    // ℓ(apex) = 0, ℓ ≤ -1 on the lower cover, ℓ ≥ 1 outside.
    RationalMatrix F{E.point(entry.apex)}, G;
    F[0].push_back(1);
    RationalVector f{0}, g;
    for (int q = 0; q < E.size(); ++q) {
      if (q == entry.apex) continue;
      RationalVector row = E.point(q);
      row.push_back(1);
      if (lower.contains(q))
        for (auto& v : row) v = -v;
      G.push_back(std::move(row));
      g.push_back(1);
    }
    LpOutcome lp = solve_free(d + 1, F, f, G, g);
    if (!lp.feasible) {
      fail(name + ": no separating functional vanishing only at " + E.labels()[entry.apex]);
    } else {
      AffineFunctional l{RationalVector(lp.x.begin(), lp.x.begin() + d), lp.x[d]};
      for (int q = 0; q < E.size(); ++q) {
        Rational v = l(E.point(q));
        bool ok = q == entry.apex ? v == 0 : lower.contains(q) ? v <= -1 : v >= 1;
        if (!ok) fail(name + ": functional check failed at " + E.labels()[q]);
      }
      entry.functional = std::move(l);
    }
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

PointConfiguration random_configuration(std::uint64_t seed, int max_size) {
  std::mt19937_64 rng(seed);
  int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, max_size)));
  std::vector<RationalVector> pts;
  while (static_cast<int>(pts.size()) < n) {
    RationalVector p(2);
    for (auto& q : p) {
      q = Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 2));
      q.canonicalize();
    }
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  }
  return PointConfiguration(std::move(pts));
}

}  // namespace regcl
