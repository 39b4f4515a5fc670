#include "regcl/semilattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <sstream>

namespace regcl {

JoinSemilattice JoinSemilattice::from_order(GroundSet ground, const Order& ord) {
  int n = ground.size();
  if (ord.size() != n) throw Error(ErrorCode::InvalidSemilattice, "order size differs from ground");
  if (n == 0) throw Error(ErrorCode::InvalidSemilattice, "empty semilattice");
  JoinSemilattice s;
  s.ground_ = std::move(ground);
  s.order_ = ord;
  s.join_.assign(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      ElementSet ub = ord.up(x) & ord.up(y);
      int j = -1;
      ub.for_each([&](int c) {
        if (j < 0 && ub.subset_of(ord.up(c))) j = c;
      });
      if (j < 0)
        throw Error(ErrorCode::InvalidSemilattice, s.ground_.label(x) + " and " +
                                                       s.ground_.label(y) + " have no join");
      s.join_[x][y] = s.join_[y][x] = j;
    }
  return s;
}

JoinSemilattice JoinSemilattice::from_join_table(GroundSet ground,
                                                 const std::vector<std::vector<int>>& join) {
  int n = ground.size();
  if (n == 0) throw Error(ErrorCode::InvalidSemilattice, "empty semilattice");
  if (static_cast<int>(join.size()) != n)
    throw Error(ErrorCode::InvalidSemilattice, "join table has the wrong size");
  for (const auto& row : join) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::InvalidSemilattice, "join table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw Error(ErrorCode::InvalidSemilattice, "join value out of range");
  }
  for (int x = 0; x < n; ++x) {
    if (join[x][x] != x) throw Error(ErrorCode::InvalidSemilattice, "join is not idempotent");
    for (int y = 0; y < n; ++y) {
      if (join[x][y] != join[y][x])
        throw Error(ErrorCode::InvalidSemilattice, "join is not commutative");
      for (int z = 0; z < n; ++z)
        if (join[join[x][y]][z] != join[x][join[y][z]])
          throw Error(ErrorCode::InvalidSemilattice, "join is not associative");
    }
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) leq[x][y] = join[x][y] == y;
  JoinSemilattice s;
  s.ground_ = std::move(ground);
  s.order_ = Order(std::move(leq));
  s.join_ = join;
  return s;
}

int JoinSemilattice::join_of(const ElementSet& s) const {
  int j = -1;
  s.for_each([&](int x) { j = j < 0 ? x : join(j, x); });
  if (j < 0) throw Error(ErrorCode::InvalidSemilattice, "join of the empty set");
  return j;
}

ElementSet JoinSemilattice::strictly_down(int p) const {
  ElementSet d = down(p);
  d.erase(p);
  return d;
}

JoinSemilattice generate_sm(int m) {
  if (m < 1 || m > 5) throw Error(ErrorCode::TooLarge, "S_m is built for 1 <= m <= 5");
  std::vector<unsigned> masks;
  for (unsigned x = 1; x < (1u << m); ++x) masks.push_back(x);
  std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return std::make_pair(std::popcount(a), a) < std::make_pair(std::popcount(b), b);
  });
  int n = static_cast<int>(masks.size());
  std::vector<std::string> labels;
  for (unsigned x : masks) {
    std::string l;
    for (int b = 0; b < m; ++b)
      if (x >> b & 1) l += static_cast<char>('a' + b);
    labels.push_back(l);
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = (masks[i] & ~masks[j]) == 0;
  return JoinSemilattice::from_order(GroundSet(labels), Order(std::move(leq)));
}

JoinSemilattice psub_srs() {
  // Inside S3: b0 = a, a0 = ab, a1 = ac, b1 = bc, 1 = abc.
  GroundSet g({"b0", "a0", "a1", "b1", "1"});
  Order o = Order::from_pairs(5, {{0, 1}, {0, 2}, {1, 4}, {2, 4}, {3, 4}});
  return JoinSemilattice::from_order(g, o);
}

namespace {

std::vector<ElementSet> coverings_by_join(const JoinSemilattice& s, int p) {
  std::vector<int> below = s.strictly_down(p).members();
  std::vector<ElementSet> out{ElementSet::singleton(p)};
  std::vector<int> pick;
  std::function<void(size_t, int)> rec = [&](size_t k, int j) {
    if (j == p) {
      // Minimal when dropping any member lowers the join.
      bool minimal = true;
      for (size_t d = 0; d < pick.size() && minimal; ++d) {
        int jj = -1;
        for (size_t e = 0; e < pick.size(); ++e)
          if (e != d) jj = jj < 0 ? pick[e] : s.join(jj, pick[e]);
        minimal = jj != p;
      }
      if (minimal) {
        ElementSet x;
        for (int v : pick) x.insert(v);
        out.push_back(x);
      }
      return;
    }
    for (size_t i = k; i < below.size(); ++i) {
      int v = below[i];
      if (j >= 0 && s.leq(v, j)) continue;
      pick.push_back(v);
      rec(i + 1, j < 0 ? v : s.join(j, v));
      pick.pop_back();
    }
  };
  rec(0, -1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ClosureSpace semilattice_closure_space(const JoinSemilattice& s) {
  int n = s.size();
  std::vector<Rule> rules;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!s.leq(x, y) && !s.leq(y, x)) rules.push_back({ElementSet{x, y}, s.join(x, y)});
  ClosureSpace space = ClosureSpace::implications(s.ground(), std::move(rules));
  int widest = 0;
  for (int p = 0; p < n; ++p) widest = std::max(widest, s.down(p).count());
  if (widest <= 21)
    space.set_coverings_provider([s](int p) { return coverings_by_join(s, p); });
  return space;
}

bool is_ideal(const JoinSemilattice& s, const ElementSet& x) {
  bool ok = true;
  x.for_each([&](int a) {
    if (!s.down(a).subset_of(x)) ok = false;
    x.for_each([&](int b) { ok = ok && x.contains(s.join(a, b)); });
  });
  return ok;
}

std::vector<ElementSet> ideals(const JoinSemilattice& s) {
  int n = s.size();
  std::vector<Rule> rules;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x != y && s.leq(x, y)) rules.push_back({ElementSet::singleton(y), x});
      if (x < y && !s.leq(x, y) && !s.leq(y, x)) rules.push_back({ElementSet{x, y}, s.join(x, y)});
    }
  ClosureSpace sp = ClosureSpace::implications(s.ground(), std::move(rules));
  return enumerate_closed(sp, std::max(kDefaultBound, n));
}

std::vector<ElementSet> maximal_proper_ideals_below(const JoinSemilattice& s, int p) {
  ElementSet below = s.strictly_down(p);
  std::vector<ElementSet> cand;
  for (const auto& i : ideals(s))
    if (i.subset_of(below)) cand.push_back(i);
  std::vector<ElementSet> out;
  for (const auto& i : cand) {
    bool maximal = true;
    for (const auto& j : cand) maximal = maximal && !(i.subset_of(j) && i != j);
    if (maximal) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSet> semilattice_minimal_neighborhoods(const JoinSemilattice& s, int p) {
  std::vector<ElementSet> out;
  for (const auto& a : maximal_proper_ideals_below(s, p)) out.push_back(s.down(p) - a);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSet> semilattice_cji(const JoinSemilattice& s) {
  std::vector<ElementSet> out;
  for (int p = 0; p < s.size(); ++p) {
    auto covers = maximal_proper_ideals_below(s, p);
    if (covers.empty() || covers.size() > 2) continue;
    for (const auto& a : covers) out.push_back(s.down(p) - a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Some choice of n members (with repetition) of fam has union target.
bool union_of_n(const std::vector<ElementSet>& fam, const ElementSet& target, int n) {
  if (target.empty()) return true;
  std::function<bool(size_t, int, ElementSet)> rec = [&](size_t k, int left, ElementSet acc) {
    if (acc == target) return true;
    if (left == 0) return false;
    for (size_t i = k; i < fam.size(); ++i)
      if (rec(i, left - 1, acc | fam[i])) return true;
    return false;
  };
  return rec(0, n, ElementSet{});
}

}  // namespace

LowerCoverCriteria lower_cover_criteria(const JoinSemilattice& s, int p, int n) {
  LowerCoverCriteria r;
  ElementSet below = s.strictly_down(p);
  auto covers = maximal_proper_ideals_below(s, p);
  r.i = static_cast<int>(covers.size()) <= n;
  std::vector<ElementSet> inside;
  for (const auto& i : ideals(s))
    if (i.subset_of(below)) inside.push_back(i);
  r.ii = union_of_n(inside, below, n);
  r.iii = union_of_n(covers, below, n);
  std::vector<int> b = below.members();
  std::vector<int> w;
  std::function<bool(size_t)> clique = [&](size_t k) {
    if (static_cast<int>(w.size()) == n + 1) return true;
    for (size_t i = k; i < b.size(); ++i) {
      bool ok = true;
      for (int u : w) ok = ok && s.join(u, b[i]) == p;
      if (!ok) continue;
      w.push_back(b[i]);
      if (clique(i + 1)) return true;
      w.pop_back();
    }
    return false;
  };
  r.iv = !clique(0);
  return r;
}

ClopEquivalences clop_lattice_equivalences(const JoinSemilattice& s, int bound) {
  ClopEquivalences r;
  ClosureSpace space = semilattice_closure_space(s);
  RegLattice reg = enumerate_regular_closed(space, bound);
  std::vector<ElementSet> clop;
  for (size_t i = 0; i < reg.sets.size(); ++i)
    if (reg.clopen[i]) clop.push_back(reg.sets[i]);
  try {
    FiniteLattice::from_sets(clop);
    r.clop_is_lattice = true;
  } catch (const Error&) {
    r.clop_is_lattice = false;
  }
  r.complete_sublattice = true;
  auto ci = reg.clopen_indices();
  for (int x : ci) {
    for (int y : ci) {
      int j = reg.lattice.join(x, y), m = reg.lattice.meet(x, y);
      if (!reg.clopen[j] || !reg.clopen[m]) {
        r.complete_sublattice = false;
        std::ostringstream os;
        os << space.format(reg.sets[x]) << " and " << space.format(reg.sets[y]) << " have "
           << (reg.clopen[j] ? "meet " + space.format(reg.sets[m])
                             : "join " + space.format(reg.sets[j]))
           << " in Reg, which is not clopen";
        r.witness = os.str();
        break;
      }
    }
    if (!r.complete_sublattice) break;
  }
  r.clop_equals_reg = clop.size() == reg.sets.size();
  r.closure_of_open_is_open = true;
  int n = space.size();
  for_each_closed(
      space,
      [&](const ElementSet& c) {
        if (r.closure_of_open_is_open && !space.is_open(space.closure(c.complement(n))))
          r.closure_of_open_is_open = false;
      },
      bound);
  return r;
}

JoinSemilattice random_semilattice(std::uint64_t seed, int max_size) {
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t k) { return rng() % k; };
  for (;;) {
    std::vector<ElementSet> elems;
    if (draw(2) == 0) {
      // Join-closed subset of S_m.
      int m = 2 + static_cast<int>(draw(3));
      std::vector<unsigned> pick;
      for (unsigned x = 1; x < (1u << m); ++x)
        if (draw(3) == 0) pick.push_back(x);
      if (pick.empty()) pick.push_back(1u + static_cast<unsigned>(draw((1u << m) - 1)));
      for (size_t i = 0; i < pick.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
          unsigned u = pick[i] | pick[j];
          if (std::find(pick.begin(), pick.end(), u) == pick.end()) pick.push_back(u);
        }
      for (unsigned x : pick) elems.push_back(ElementSet::from_words(x, 0));
    } else {
      // Join-closed subset of a random closure-system lattice on k points.
      int k = 3 + static_cast<int>(draw(2));
      unsigned full = (1u << k) - 1;
      std::vector<unsigned> fam{full};
      int gens = 2 + static_cast<int>(draw(4));
      for (int g = 0; g < gens; ++g) fam.push_back(static_cast<unsigned>(draw(full + 1)));
      for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
          unsigned w = fam[i] & fam[j];
          if (std::find(fam.begin(), fam.end(), w) == fam.end()) fam.push_back(w);
        }
      auto cl = [&](unsigned x) {
        unsigned r = full;
        for (unsigned f : fam)
          if ((x & ~f) == 0) r &= f;
        return r;
      };
      std::vector<unsigned> pick;
      for (unsigned f : fam)
        if (draw(2) == 0) pick.push_back(f);
      if (pick.empty()) pick.push_back(fam[0]);
      for (size_t i = 0; i < pick.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
          unsigned u = cl(pick[i] | pick[j]);
          if (std::find(pick.begin(), pick.end(), u) == pick.end()) pick.push_back(u);
        }
      for (unsigned x : pick) elems.push_back(ElementSet::from_words(x, 0));
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (static_cast<int>(elems.size()) > max_size) continue;
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
      labels.push_back("s" + std::to_string(i));
      for (int j = 0; j < n; ++j) leq[i][j] = elems[i].subset_of(elems[j]);
    }
    return JoinSemilattice::from_order(GroundSet(labels), Order(std::move(leq)));
  }
}

}  // namespace regcl
