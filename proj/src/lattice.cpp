#include "regcl/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace regcl {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string order_violation(const std::vector<std::vector<bool>>& leq) {
  int n = static_cast<int>(leq.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(leq[i].size()) != n) return "order matrix is not square";
    if (!leq[i][i]) return "not reflexive at " + std::to_string(i);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i])
        return "not antisymmetric: " + std::to_string(i) + ", " + std::to_string(j);
      if (!leq[i][j]) continue;
      for (int k = 0; k < n; ++k)
        if (leq[j][k] && !leq[i][k])
          return "not transitive: " + std::to_string(i) + "<=" + std::to_string(j) +
                 "<=" + std::to_string(k);
    }
  return {};
}

// Least element of the set u (given as up-set intersection), or -1.
int least_of(const Bits& u, const std::vector<int>& upcount) {
  int c = static_cast<int>(u.count());
  for (auto k = u.find_first(); k != Bits::npos; k = u.find_next(k))
    if (upcount[k] == c) return static_cast<int>(k);
  return -1;
}

}  // namespace

// ------------------------------------------------------------ FiniteLattice

FiniteLattice FiniteLattice::from_leq(const std::vector<std::vector<bool>>& leq,
                                      std::vector<std::string> labels) {
  int n = static_cast<int>(leq.size());
  if (n == 0) throw Error(ErrorCode::InvalidLattice, "a lattice needs at least one element");
  if (n > kMaxLatticeSize)
    throw Error(ErrorCode::TooLarge, "lattice of " + std::to_string(n) + " elements is too large");
  if (auto v = order_violation(leq); !v.empty()) throw Error(ErrorCode::InvalidLattice, v);
  FiniteLattice L;
  L.n_ = n;
  L.labels_ = labels.empty() ? default_labels(n) : std::move(labels);
  if (static_cast<int>(L.labels_.size()) != n)
    throw Error(ErrorCode::InvalidLattice, "label count does not match size");
  L.up_.assign(n, Bits(n));
  L.down_.assign(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[i][j]) {
        L.up_[i].set(j);
        L.down_[j].set(i);
      }
  std::vector<int> upc(n), downc(n);
  for (int i = 0; i < n; ++i) {
    upc[i] = static_cast<int>(L.up_[i].count());
    downc[i] = static_cast<int>(L.down_[i].count());
    if (upc[i] == n) L.bottom_ = i;
    if (downc[i] == n) L.top_ = i;
  }
  if (L.bottom_ < 0 || L.top_ < 0) throw Error(ErrorCode::InvalidLattice, "missing bottom or top");
  L.join_.assign(static_cast<size_t>(n) * n, -1);
  L.meet_.assign(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int jn = least_of(L.up_[i] & L.up_[j], upc);
      int mt = least_of(L.down_[i] & L.down_[j], downc);
      if (jn < 0 || mt < 0)
        throw Error(ErrorCode::InvalidLattice, "elements " + L.labels_[i] + " and " +
                                                   L.labels_[j] + " lack a join or a meet");
      L.join_[static_cast<size_t>(i) * n + j] = L.join_[static_cast<size_t>(j) * n + i] = jn;
      L.meet_[static_cast<size_t>(i) * n + j] = L.meet_[static_cast<size_t>(j) * n + i] = mt;
    }
  return L;
}

FiniteLattice FiniteLattice::from_sets(const std::vector<ElementSet>& sets,
                                       std::vector<std::string> labels) {
  int n = static_cast<int>(sets.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = sets[i].subset_of(sets[j]);
  return from_leq(leq, std::move(labels));
}

FiniteLattice FiniteLattice::chain(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = i <= j;
  return from_leq(leq);
}

int FiniteLattice::join_all(const std::vector<int>& xs) const {
  int r = bottom_;
  for (int x : xs) r = join(r, x);
  return r;
}

int FiniteLattice::meet_all(const std::vector<int>& xs) const {
  int r = top_;
  for (int x : xs) r = meet(r, x);
  return r;
}

std::vector<std::string> ortho_violations(const FiniteLattice& L, const std::vector<int>& o) {
  std::vector<std::string> out;
  int n = L.size();
  if (static_cast<int>(o.size()) != n) {
    out.push_back("ortho map has the wrong length");
    return out;
  }
  for (int x = 0; x < n; ++x)
    if (o[x] < 0 || o[x] >= n) {
      out.push_back("ortho value out of range");
      return out;
    }
  for (int x = 0; x < n; ++x) {
    if (o[o[x]] != x) out.push_back("not an involution at " + L.label(x));
    if (L.meet(x, o[x]) != L.bottom())
      out.push_back("x meet ortho(x) is not the bottom at " + L.label(x));
    for (int y = 0; y < n; ++y)
      if (L.leq(x, y) && !L.leq(o[y], o[x]))
        out.push_back("not order-reversing on " + L.label(x) + " <= " + L.label(y));
  }
  return out;
}

void FiniteLattice::set_ortho(std::vector<int> ortho) {
  auto v = ortho_violations(*this, ortho);
  if (!v.empty()) throw Error(ErrorCode::InvalidOrthoposet, v.front());
  ortho_ = std::move(ortho);
}

std::vector<int> FiniteLattice::lower_covers(int i) const {
  std::vector<int> out;
  for (auto j = down_[i].find_first(); j != Bits::npos; j = down_[i].find_next(j)) {
    if (static_cast<int>(j) == i) continue;
    if ((up_[j] & down_[i]).count() == 2) out.push_back(static_cast<int>(j));
  }
  return out;
}

std::vector<int> FiniteLattice::upper_covers(int i) const {
  std::vector<int> out;
  for (auto j = up_[i].find_first(); j != Bits::npos; j = up_[i].find_next(j)) {
    if (static_cast<int>(j) == i) continue;
    if ((down_[j] & up_[i]).count() == 2) out.push_back(static_cast<int>(j));
  }
  return out;
}

FiniteLattice FiniteLattice::dual() const {
  FiniteLattice D = *this;
  std::swap(D.up_, D.down_);
  std::swap(D.join_, D.meet_);
  std::swap(D.bottom_, D.top_);
  return D;
}

std::vector<std::vector<bool>> FiniteLattice::leq_matrix() const {
  std::vector<std::vector<bool>> m(n_, std::vector<bool>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m[i][j] = leq(i, j);
  return m;
}

// --------------------------------------------------------------- validation

ValidationReport validate_lattice(const std::vector<std::vector<bool>>& leq,
                                  const std::vector<int>& ortho,
                                  const std::vector<std::vector<int>>& join_table,
                                  const std::vector<std::vector<int>>& meet_table) {
  ValidationReport r;
  if (auto v = order_violation(leq); !v.empty()) {
    r.violations.push_back(v);
    return r;
  }
  r.order_ok = true;
  FiniteLattice L;
  try {
    L = FiniteLattice::from_leq(leq);
  } catch (const Error& e) {
    r.violations.push_back(e.what());
    return r;
  }
  r.lattice_ok = true;
  int n = L.size();
  auto check_table = [&](const std::vector<std::vector<int>>& t, bool is_join) {
    if (t.empty()) return;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int want = is_join ? L.join(i, j) : L.meet(i, j);
        if (i >= static_cast<int>(t.size()) || j >= static_cast<int>(t[i].size()) ||
            t[i][j] != want) {
          r.lattice_ok = false;
          r.violations.push_back(std::string(is_join ? "join" : "meet") + " table wrong at (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
          return;
        }
      }
  };
  check_table(join_table, true);
  check_table(meet_table, false);
  if (!ortho.empty()) {
    auto v = ortho_violations(L, ortho);
    r.ortho_ok = v.empty();
    r.violations.insert(r.violations.end(), v.begin(), v.end());
  }
  return r;
}

ValidationReport validate_lattice(const FiniteLattice& L) {
  return validate_lattice(L.leq_matrix(), L.has_ortho() ? *L.ortho_map() : std::vector<int>{});
}

// ----------------------------------------------------- irreducibles, arrows

std::vector<int> join_irreducibles(const FiniteLattice& L) {
  std::vector<int> out;
  for (int i = 0; i < L.size(); ++i)
    if (L.lower_covers(i).size() == 1) out.push_back(i);
  return out;
}

std::vector<int> meet_irreducibles(const FiniteLattice& L) {
  std::vector<int> out;
  for (int i = 0; i < L.size(); ++i)
    if (L.upper_covers(i).size() == 1) out.push_back(i);
  return out;
}

ArrowReport irreducibles_and_arrows(const FiniteLattice& L) {
  ArrowReport r;
  r.ji = join_irreducibles(L);
  r.mi = meet_irreducibles(L);
  for (int p : r.ji) r.lower_cover.push_back(L.lower_covers(p)[0]);
  for (int u : r.mi) r.upper_cover.push_back(L.upper_covers(u)[0]);
  for (size_t a = 0; a < r.ji.size(); ++a)
    for (size_t b = 0; b < r.mi.size(); ++b) {
      int p = r.ji[a], u = r.mi[b];
      if (L.leq(p, u)) continue;
      if (L.leq(p, r.upper_cover[b])) r.up_arrows.push_back({p, u});
      if (L.leq(r.lower_cover[a], u)) r.down_arrows.push_back({u, p});
    }
  return r;
}

DGraph join_dependency(const FiniteLattice& L) {
  ArrowReport ar = irreducibles_and_arrows(L);
  DGraph g;
  g.vertices = ar.ji;
  std::map<int, std::vector<int>> ups;  // p -> u with p ↗ u
  std::map<int, std::vector<int>> downs;  // u -> q with u ↘ q
  for (auto [p, u] : ar.up_arrows) ups[p].push_back(u);
  for (auto [u, q] : ar.down_arrows) downs[u].push_back(q);
  for (int p : ar.ji) {
    std::vector<int> targets;
    for (int u : ups[p])
      for (int q : downs[u])
        if (q != p) targets.push_back(q);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (int q : targets) g.edges.push_back({p, q});
  }
  for (size_t a = 0; a < ar.ji.size(); ++a)
    for (size_t b = 0; b < ar.ji.size(); ++b) {
      int p = ar.ji[a], q = ar.ji[b];
      if (p == q) continue;
      int qs = ar.lower_cover[b];
      for (int x = 0; x < L.size(); ++x)
        if (L.leq(p, L.join(q, x)) && !L.leq(p, L.join(qs, x))) {
          g.direct_edges.push_back({p, q});
          break;
        }
    }
  std::sort(g.edges.begin(), g.edges.end());
  std::sort(g.direct_edges.begin(), g.direct_edges.end());
  return g;
}

namespace {

std::vector<int> find_cycle(const std::vector<int>& vertices,
                            const std::vector<std::pair<int, int>>& edges) {
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : edges) adj[a].push_back(b);
  std::map<int, int> state;
  std::vector<int> stack, cycle;
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    stack.push_back(v);
    for (int w : adj[v]) {
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle.assign(it, stack.end());
        return true;
      }
      if (state[w] == 0 && dfs(w)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (int v : vertices)
    if (state[v] == 0 && dfs(v)) return cycle;
  return {};
}

}  // namespace

Boundedness is_bounded(const FiniteLattice& L) {
  Boundedness b;
  DGraph g = join_dependency(L);
  DGraph gd = join_dependency(L.dual());
  b.arrow_and_direct_agree = g.agree() && gd.agree();
  auto c1 = find_cycle(g.vertices, g.edges);
  auto c2 = find_cycle(gd.vertices, gd.edges);
  b.lower_bounded = c1.empty();
  b.upper_bounded = c2.empty();
  b.bounded = b.lower_bounded && b.upper_bounded;
  b.cycle = !c1.empty() ? c1 : c2;
  return b;
}

// ---------------------------------------------------------- distributivity

SdReport semidistributivity(const FiniteLattice& L) {
  SdReport r;
  int n = L.size();
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        if (!r.join_witness && L.join(x, z) == L.join(y, z) &&
            L.join(L.meet(x, y), z) != L.join(x, z))
          r.join_witness = Triple{x, y, z};
        if (!r.meet_witness && L.meet(x, z) == L.meet(y, z) &&
            L.meet(L.join(x, y), z) != L.meet(x, z))
          r.meet_witness = Triple{x, y, z};
      }
  r.sd_join = !r.join_witness;
  r.sd_meet = !r.meet_witness;
  r.sd = r.sd_join && r.sd_meet;
  return r;
}

RsdResult satisfies_rsd(const FiniteLattice& L, int m) {
  RsdResult res;
  if (m < 1) throw Error(ErrorCode::InvalidLattice, "RSD needs m >= 1");
  int n = L.size();
  std::vector<int> parent_y(n), parent_s(n);
  for (int c = 0; c < n; ++c) {
    std::map<int, std::vector<int>> classes;
    for (int a = 0; a < n; ++a) classes[L.join(a, c)].push_back(a);
    for (auto& [t, S] : classes) {
      bool any = false;
      for (int a0 : S)
        if (!L.leq(a0, c)) any = true;
      if (!any) continue;
      // reach[y]: y is a meet of at most k members of S.
      std::vector<char> reach(n, 0);
      std::vector<int> level;
      for (int s : S)
        if (!reach[s]) {
          reach[s] = 1;
          parent_y[s] = -1;
          parent_s[s] = s;
          level.push_back(s);
        }
      std::vector<int> all = level;
      for (int k = 2; k <= m; ++k) {
        std::vector<int> next;
        for (int y : all)
          for (int s : S) {
            int w = L.meet(y, s);
            if (!reach[w]) {
              reach[w] = 1;
              parent_y[w] = y;
              parent_s[w] = s;
              next.push_back(w);
            }
          }
        if (next.empty()) break;
        all.insert(all.end(), next.begin(), next.end());
      }
      for (int a0 : S) {
        if (L.leq(a0, c)) continue;
        int target = L.meet(a0, c);
        for (int y : all) {
          if (L.meet(a0, y) != target) continue;
          res.holds = false;
          res.c = c;
          res.a = {a0};
          for (int w = y; w >= 0; w = parent_y[w]) res.a.push_back(parent_s[w]);
          while (static_cast<int>(res.a.size()) < m + 1) res.a.push_back(res.a.back());
          return res;
        }
      }
    }
  }
  return res;
}

bool is_pseudocomplemented(const FiniteLattice& L) {
  int n = L.size();
  for (int x = 0; x < n; ++x) {
    int j = L.bottom();
    for (int y = 0; y < n; ++y)
      if (L.meet(x, y) == L.bottom()) j = L.join(j, y);
    if (L.meet(x, j) != L.bottom()) return false;
  }
  return true;
}

bool is_distributive(const FiniteLattice& L) {
  int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return false;
  return true;
}

bool is_complemented(const FiniteLattice& L) {
  int n = L.size();
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int y = 0; y < n && !found; ++y)
      found = L.meet(x, y) == L.bottom() && L.join(x, y) == L.top();
    if (!found) return false;
  }
  return true;
}

// ------------------------------------------------ sublattices, isomorphism

std::vector<int> generated_sublattice(const FiniteLattice& L, const std::vector<int>& gens) {
  std::vector<char> in(L.size(), 0);
  std::vector<int> elems;
  for (int g : gens)
    if (!in[g]) {
      in[g] = 1;
      elems.push_back(g);
    }
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j <= i; ++j)
      for (int w : {L.join(elems[i], elems[j]), L.meet(elems[i], elems[j])})
        if (!in[w]) {
          in[w] = 1;
          elems.push_back(w);
        }
  std::sort(elems.begin(), elems.end());
  return elems;
}

FiniteLattice induced(const FiniteLattice& L, const std::vector<int>& elems) {
  int k = static_cast<int>(elems.size());
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k));
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    labels.push_back(L.label(elems[i]));
    for (int j = 0; j < k; ++j) leq[i][j] = L.leq(elems[i], elems[j]);
  }
  return FiniteLattice::from_leq(leq, labels);
}

std::optional<std::vector<int>> isomorphism(const FiniteLattice& A, const FiniteLattice& B) {
  int n = A.size();
  if (n != B.size()) return std::nullopt;
  auto sig = [](const FiniteLattice& L, int i) {
    return std::make_tuple(L.down(i).count(), L.up(i).count(), L.lower_covers(i).size(),
                           L.upper_covers(i).size());
  };
  std::vector<std::tuple<size_t, size_t, size_t, size_t>> sa(n), sb(n);
  for (int i = 0; i < n; ++i) {
    sa[i] = sig(A, i);
    sb[i] = sig(B, i);
  }
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return A.down(a).count() < A.down(b).count(); });
  std::vector<int> f(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> rec = [&](int k) {
    if (k == n) return true;
    int a = order[k];
    for (int b = 0; b < n; ++b) {
      if (used[b] || sb[b] != sa[a]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        int a2 = order[j], b2 = f[a2];
        ok = A.leq(a, a2) == B.leq(b, b2) && A.leq(a2, a) == B.leq(b2, b);
      }
      if (!ok) continue;
      f[a] = b;
      used[b] = 1;
      if (rec(k + 1)) return true;
      used[b] = 0;
      f[a] = -1;
    }
    return false;
  };
  if (rec(0)) return f;
  return std::nullopt;
}

bool is_isomorphic(const FiniteLattice& A, const FiniteLattice& B) {
  return isomorphism(A, B).has_value();
}

std::string canonical_certificate(const FiniteLattice& L) {
  int n = L.size();
  if (n > 10) throw Error(ErrorCode::TooLarge, "canonical certificates are for lattices up to 10");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    return std::make_pair(L.down(a).count(), a) < std::make_pair(L.down(b).count(), b);
  });
  // Only permutations compatible with the down-set sizes are tried.
  std::vector<size_t> key(n);
  for (int i = 0; i < n; ++i) key[i] = L.down(perm[i]).count();
  std::string best;
  std::function<void(int)> rec;
  std::vector<int> p = perm;
  auto encode = [&]() {
    std::string s(static_cast<size_t>(n) * n, '0');
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (L.leq(p[i], p[j])) s[static_cast<size_t>(i) * n + j] = '1';
    return s;
  };
  // Permute within blocks of equal key.
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && key[j] == key[i]) ++j;
    blocks.push_back({i, j});
    i = j;
  }
  rec = [&](int b) {
    if (b == static_cast<int>(blocks.size())) {
      std::string s = encode();
      if (best.empty() || s < best) best = s;
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(p.begin() + lo, p.begin() + hi);
    do {
      rec(b + 1);
    } while (std::next_permutation(p.begin() + lo, p.begin() + hi));
  };
  rec(0);
  return std::to_string(n) + ":" + best;
}

namespace {

struct Step {
  int elem, op, a, b;  // op 0: generator a; 1: join; 2: meet
};

// Closure derivation of the sublattice generated by gens[0..k).
std::vector<Step> derivation(const FiniteLattice& P, const std::vector<int>& gens, int k) {
  std::vector<Step> steps;
  std::vector<char> in(P.size(), 0);
  for (int i = 0; i < k; ++i)
    if (!in[gens[i]]) {
      in[gens[i]] = 1;
      steps.push_back({gens[i], 0, i, -1});
    }
  for (size_t i = 0; i < steps.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      int x = steps[i].elem, y = steps[j].elem;
      if (int w = P.join(x, y); !in[w]) {
        in[w] = 1;
        steps.push_back({w, 1, x, y});
      }
      if (int w = P.meet(x, y); !in[w]) {
        in[w] = 1;
        steps.push_back({w, 2, x, y});
      }
    }
  return steps;
}

std::vector<int> minimal_generators(const FiniteLattice& P) {
  int n = P.size();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> pick(k);
    std::vector<bool> sel(n, false);
    std::fill(sel.end() - k, sel.end(), true);
    do {
      pick.clear();
      for (int i = 0; i < n; ++i)
        if (sel[i]) pick.push_back(i);
      if (static_cast<int>(generated_sublattice(P, pick).size()) == n) return pick;
    } while (std::next_permutation(sel.begin(), sel.end()));
  }
  return {};
}

}  // namespace

std::optional<Embedding> find_sublattice_copy(const FiniteLattice& L, const FiniteLattice& pattern) {
  if (pattern.size() > 8) throw Error(ErrorCode::TooLarge, "pattern above 8 elements");
  std::vector<int> gens = minimal_generators(pattern);
  int k = static_cast<int>(gens.size());
  std::vector<std::vector<Step>> steps(k + 1);
  for (int i = 1; i <= k; ++i) steps[i] = derivation(pattern, gens, i);
  std::vector<int> img(k, -1);
  std::vector<int> f(pattern.size(), -1);
  auto consistent = [&](int depth) {
    const auto& st = steps[depth];
    std::fill(f.begin(), f.end(), -1);
    for (const auto& s : st) {
      if (s.op == 0) f[s.elem] = img[s.a];
      else if (s.op == 1) f[s.elem] = L.join(f[s.a], f[s.b]);
      else f[s.elem] = L.meet(f[s.a], f[s.b]);
    }
    for (size_t i = 0; i < st.size(); ++i)
      for (size_t j = 0; j < st.size(); ++j) {
        int x = st[i].elem, y = st[j].elem;
        if (i != j && f[x] == f[y]) return false;
        if (f[pattern.join(x, y)] != L.join(f[x], f[y])) return false;
        if (f[pattern.meet(x, y)] != L.meet(f[x], f[y])) return false;
      }
    return true;
  };
  std::function<bool(int)> rec = [&](int depth) {
    if (depth == k) return true;
    for (int c = 0; c < L.size(); ++c) {
      img[depth] = c;
      if (consistent(depth + 1) && rec(depth + 1)) return true;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  consistent(k);
  return Embedding{f};
}

// ------------------------------------------------- completions, tightness

DmCompletion dedekind_macneille(const Order& K, const std::vector<std::string>& labels) {
  int n = K.size();
  if (n > kMaxElements) throw Error(ErrorCode::TooLarge, "poset too large for the cut lattice");
  std::vector<ElementSet> family{ElementSet::full(n)};
  std::unordered_map<ElementSet, int, ElementSetHash> seen{{family[0], 0}};
  for (int x = 0; x < n; ++x) {
    ElementSet d = K.down(x);
    if (seen.emplace(d, static_cast<int>(family.size())).second) family.push_back(d);
  }
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      ElementSet w = family[i] & family[j];
      if (seen.emplace(w, static_cast<int>(family.size())).second) family.push_back(w);
    }
  std::sort(family.begin(), family.end());
  DmCompletion out;
  out.cuts = family;
  std::unordered_map<ElementSet, int, ElementSetHash> index;
  for (int i = 0; i < static_cast<int>(family.size()); ++i) index[family[i]] = i;
  std::vector<std::string> names(family.size());
  for (int x = 0; x < n; ++x) {
    int i = index.at(K.down(x));
    out.embedding.push_back(i);
    names[i] = labels.empty() ? std::to_string(x) : labels[x];
  }
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i].empty()) names[i] = "cut" + std::to_string(i);
  out.lattice = FiniteLattice::from_sets(family, names);
  return out;
}

bool is_dm_completion(const FiniteLattice& L, const std::vector<int>& K) {
  for (int a = 0; a < L.size(); ++a) {
    std::vector<int> below, above;
    for (int k : K) {
      if (L.leq(k, a)) below.push_back(k);
      if (L.leq(a, k)) above.push_back(k);
    }
    if (L.join_all(below) != a || L.meet_all(above) != a) return false;
  }
  return true;
}

TightnessReport is_tight(const FiniteLattice& L, const std::vector<int>& K) {
  TightnessReport r;
  std::vector<char> inK(L.size(), 0);
  for (int k : K) inK[k] = 1;
  for (int b = 0; b < L.size(); ++b) {
    if (inK[b]) continue;
    std::vector<int> below, above;
    for (int k : K) {
      if (L.leq(k, b)) below.push_back(k);
      if (L.leq(b, k)) above.push_back(k);
    }
    // Least element of K above b, and greatest of K below b.
    int least = -1, greatest = -1;
    for (int k : above) {
      bool ok = true;
      for (int k2 : above) ok = ok && L.leq(k, k2);
      if (ok) least = k;
    }
    for (int k : below) {
      bool ok = true;
      for (int k2 : below) ok = ok && L.leq(k2, k);
      if (ok) greatest = k;
    }
    if (r.joins_ok && least >= 0 && L.join_all(below) == b) {
      r.joins_ok = false;
      r.witness = "the members of K below " + L.label(b) + " join to " + L.label(least) +
                  " in K but to " + L.label(b) + " in L";
    }
    if (r.meets_ok && greatest >= 0 && L.meet_all(above) == b) {
      r.meets_ok = false;
      if (r.witness.empty())
        r.witness = "the members of K above " + L.label(b) + " meet to " + L.label(greatest) +
                    " in K but to " + L.label(b) + " in L";
    }
  }
  r.tight = r.joins_ok && r.meets_ok;
  return r;
}

TightnessReport is_tight_bruteforce(const FiniteLattice& L, const std::vector<int>& K, int cap) {
  TightnessReport r;
  int k = static_cast<int>(K.size());
  if (cap < 0) {
    if (k > 20) throw Error(ErrorCode::TooLarge, "exhaustive tightness sweep above 20 elements");
    cap = k;
  }
  std::vector<int> X;
  auto check = [&]() {
    std::vector<int> ub, lb;
    for (int c : K) {
      bool u = true, l = true;
      for (int x : X) {
        u = u && L.leq(x, c);
        l = l && L.leq(c, x);
      }
      if (u) ub.push_back(c);
      if (l) lb.push_back(c);
    }
    for (int a : ub) {
      bool least = true;
      for (int c : ub) least = least && L.leq(a, c);
      if (least && L.join_all(X) != a && r.joins_ok) {
        r.joins_ok = false;
        r.witness = "join of a " + std::to_string(X.size()) + "-element family differs";
      }
    }
    for (int a : lb) {
      bool greatest = true;
      for (int c : lb) greatest = greatest && L.leq(c, a);
      if (greatest && L.meet_all(X) != a && r.meets_ok) {
        r.meets_ok = false;
        if (r.witness.empty())
          r.witness = "meet of a " + std::to_string(X.size()) + "-element family differs";
      }
    }
  };
  std::function<void(int)> rec = [&](int start) {
    check();
    if (static_cast<int>(X.size()) == cap) return;
    for (int i = start; i < k; ++i) {
      X.push_back(K[i]);
      rec(i + 1);
      X.pop_back();
    }
  };
  rec(0);
  r.tight = r.joins_ok && r.meets_ok;
  return r;
}

FiniteLattice parallel_sum(const FiniteLattice& A, const FiniteLattice& B) {
  int na = A.size(), nb = B.size(), n = na + nb + 2;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::vector<std::string> labels{"0"};
  for (int i = 0; i < na; ++i) labels.push_back("A." + A.label(i));
  for (int i = 0; i < nb; ++i) labels.push_back("B." + B.label(i));
  labels.push_back("1");
  for (int i = 0; i < n; ++i) {
    leq[0][i] = true;
    leq[i][n - 1] = true;
    leq[i][i] = true;
  }
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) leq[1 + i][1 + j] = A.leq(i, j);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) leq[1 + na + i][1 + na + j] = B.leq(i, j);
  return FiniteLattice::from_leq(leq, labels);
}

// ------------------------------------------------------------- built-ins

namespace lattices {

namespace {

FiniteLattice from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                          std::vector<std::string> labels) {
  Order o = Order::from_pairs(n, covers);
  return FiniteLattice::from_leq(o.matrix(), std::move(labels));
}

}  // namespace

FiniteLattice m3() {
  return from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, {"0", "a", "b", "c", "1"});
}

FiniteLattice m4() {
  auto L = from_covers(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}},
                       {"0", "a", "a'", "b", "b'", "1"});
  L.set_ortho({5, 2, 1, 4, 3, 0});
  return L;
}

// Three atoms x, y, z with x under both coatoms x∨y and x∨z, and y∨z = 1.
FiniteLattice l1() {
  return from_covers(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 4}, {4, 6}, {5, 6}},
                     {"0", "x", "y", "z", "xz", "xy", "1"});
}

FiniteLattice l3() {
  return from_covers(7, {{0, 1}, {0, 3}, {1, 2}, {1, 5}, {2, 4}, {3, 4}, {4, 6}, {5, 6}},
                     {"0", "p", "q", "r", "s", "t", "1"});
}

// Atoms x, y, z with x∨y < 1 and x∨z = y∨z = 1.
FiniteLattice l4() {
  return from_covers(6, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {2, 3}, {3, 5}, {4, 5}},
                     {"0", "x", "y", "xy", "z", "1"});
}

FiniteLattice benzene() {
  auto L = from_covers(6, {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}},
                       {"0", "x1", "x2", "y1", "y2", "1"});
  L.set_ortho({5, 4, 3, 2, 1, 0});
  return L;
}

FiniteLattice boolean(int atoms) {
  int n = 1 << atoms;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    std::string s;
    for (int b = 0; b < atoms; ++b)
      if (i >> b & 1) s += static_cast<char>('a' + b);
    labels.push_back(s.empty() ? "0" : s);
    for (int j = 0; j < n; ++j) leq[i][j] = (i & ~j) == 0;
  }
  auto L = FiniteLattice::from_leq(leq, labels);
  std::vector<int> o(n);
  for (int i = 0; i < n; ++i) o[i] = (n - 1) ^ i;
  L.set_ortho(o);
  return L;
}

FiniteLattice two_atom_boolean() {
  auto L = from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"0", "a", "a'", "1"});
  L.set_ortho({3, 2, 1, 0});
  return L;
}

std::vector<std::string> names() {
  return {"M3", "M4", "L1", "L1op", "L3", "L3op", "L4", "L4op", "benzene", "B2"};
}

FiniteLattice by_name(const std::string& name) {
  if (name == "M3") return m3();
  if (name == "M4") return m4();
  if (name == "L1") return l1();
  if (name == "L1op") return l1().dual();
  if (name == "L3") return l3();
  if (name == "L3op") return l3().dual();
  if (name == "L4") return l4();
  if (name == "L4op") return l4().dual();
  if (name == "benzene") return benzene();
  if (name == "B2") return two_atom_boolean();
  throw Error(ErrorCode::UnknownName, "no built-in lattice named '" + name + "'");
}

}  // namespace lattices

// -------------------------------------------------------------- Reg, orthoposet spaces

int RegLattice::index_of(const ElementSet& s) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), s);
  if (it == sets.end() || *it != s) return -1;
  return static_cast<int>(it - sets.begin());
}

std::vector<int> RegLattice::clopen_indices() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(sets.size()); ++i)
    if (clopen[i]) out.push_back(i);
  return out;
}

RegLattice enumerate_regular_closed(const ClosureSpace& space, int bound) {
  RegLattice r;
  r.sets = regular_closed_sets(space, bound);
  if (static_cast<int>(r.sets.size()) > kMaxLatticeSize)
    throw Error(ErrorCode::TooLarge, std::to_string(r.sets.size()) +
                                         " regular closed sets; too many to tabulate a lattice");
  std::vector<std::string> labels;
  for (const auto& s : r.sets) labels.push_back(space.format(s));
  r.lattice = FiniteLattice::from_sets(r.sets, labels);
  int n = space.size();
  std::vector<int> ortho;
  for (const auto& s : r.sets) {
    ortho.push_back(r.index_of(space.closure(s.complement(n))));
    r.clopen.push_back(space.is_open(s));
  }
  r.lattice.set_ortho(ortho);
  return r;
}

OrthoposetSpace orthoposet_space(const FiniteLattice& L) {
  if (!L.has_ortho()) throw Error(ErrorCode::InvalidOrthoposet, "no orthocomplementation given");
  if (auto v = ortho_violations(L, *L.ortho_map()); !v.empty())
    throw Error(ErrorCode::InvalidOrthoposet, v.front());
  int n = L.size();
  auto orth = [&](int x, int y) { return L.leq(x, L.ortho(y)); };
  std::vector<int> verts;
  for (int x = 0; x < n; ++x)
    if (!orth(x, x)) verts.push_back(x);
  // Maximal cliques of the non-orthogonality graph (Bron–Kerbosch).
  std::vector<std::vector<int>> cliques;
  std::function<void(std::vector<int>, std::vector<int>, std::vector<int>)> bk =
      [&](std::vector<int> R, std::vector<int> P, std::vector<int> X) {
        if (P.empty() && X.empty()) {
          cliques.push_back(R);
          return;
        }
        while (!P.empty()) {
          int v = P.back();
          P.pop_back();
          std::vector<int> P2, X2;
          for (int w : P)
            if (!orth(v, w)) P2.push_back(w);
          for (int w : X)
            if (!orth(v, w)) X2.push_back(w);
          auto R2 = R;
          R2.push_back(v);
          bk(R2, P2, X2);
          X.push_back(v);
        }
      };
  bk({}, verts, {});
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());
  if (static_cast<int>(cliques.size()) > kMaxElements)
    throw Error(ErrorCode::TooLarge, "too many maximal anti-orthogonal sets");
  std::vector<std::string> labels;
  for (const auto& c : cliques) {
    std::string s = "{";
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + L.label(c[i]);
    labels.push_back(s + "}");
  }
  std::vector<ElementSet> z(n);
  for (int w = 0; w < static_cast<int>(cliques.size()); ++w)
    for (int x : cliques[w]) z[x].insert(w);
  OrthoposetSpace out{ClosureSpace::intersections(GroundSet(labels), z), z};
  return out;
}

std::string to_dot(const FiniteLattice& L, const std::string& name) {
  std::ostringstream os;
  std::vector<char> ji(L.size(), 0);
  for (int p : join_irreducibles(L)) ji[p] = 1;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int i = 0; i < L.size(); ++i)
    os << "  n" << i << " [label=\"" << L.label(i) << "\"" << (ji[i] ? ", shape=doublecircle" : "")
       << "];\n";
  for (int i = 0; i < L.size(); ++i)
    for (int j : L.upper_covers(i)) os << "  n" << i << " -> n" << j << " [arrowhead=none];\n";
  os << "}\n";
  return os.str();
}

}  // namespace regcl
