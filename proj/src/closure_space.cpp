#include "regcl/closure_space.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

namespace regcl {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::GroundTooLarge: return "GroundTooLarge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidSpace: return "InvalidSpace";
    case ErrorCode::BackendFailure: return "BackendFailure";
    case ErrorCode::InvalidOrthoposet: return "InvalidOrthoposet";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::InvalidLattice: return "InvalidLattice";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::TooManyCuts: return "TooManyCuts";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidSemilattice: return "InvalidSemilattice";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArrangement: return "InvalidArrangement";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownName: return "UnknownName";
  }
  return "Error";
}

// ---------------------------------------------------------------- GroundSet

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) > kMaxElements)
    throw Error(ErrorCode::GroundTooLarge,
                "ground set of " + std::to_string(labels_.size()) + " elements exceeds capacity " +
                    std::to_string(kMaxElements));
  for (int i = 0; i < size(); ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw Error(ErrorCode::InvalidSpace, "duplicate label '" + labels_[i] + "'");
  }
}

GroundSet GroundSet::numbered(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

int GroundSet::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  return it == index_.end() ? -1 : it->second;
}

int GroundSet::index(std::string_view label) const {
  int i = find(label);
  if (i < 0) throw Error(ErrorCode::UnknownName, "no element labeled '" + std::string(label) + "'");
  return i;
}

ElementSet GroundSet::set_of(const std::vector<std::string>& labels) const {
  ElementSet s;
  for (const auto& l : labels) s.insert(index(l));
  return s;
}

std::vector<std::string> GroundSet::names(const ElementSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](int i) { out.push_back(labels_.at(i)); });
  return out;
}

std::string GroundSet::format(const ElementSet& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int i) {
    if (!first) out += ",";
    first = false;
    out += labels_.at(i);
  });
  return out + "}";
}

// -------------------------------------------------------------------- Order

Order::Order(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  int n = size();
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(leq_[i].size()) != n)
      throw Error(ErrorCode::InvalidOrder, "order matrix is not square");
    if (!leq_[i][i])
      throw Error(ErrorCode::InvalidOrder, "not reflexive at " + std::to_string(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i])
        throw Error(ErrorCode::NotAntisymmetric,
                    std::to_string(i) + " and " + std::to_string(j) + " are mutually below");
      if (!leq_[i][j]) continue;
      for (int k = 0; k < n; ++k)
        if (leq_[j][k] && !leq_[i][k])
          throw Error(ErrorCode::NotTransitive, std::to_string(i) + "<=" + std::to_string(j) +
                                                    "<=" + std::to_string(k));
    }
}

Order Order::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) m[i][i] = true;
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw Error(ErrorCode::IndexOutOfRange, "order pair out of range");
    m[a][b] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (m[i][k])
        for (int j = 0; j < n; ++j)
          if (m[k][j]) m[i][j] = true;
  return Order(std::move(m));
}

Order Order::antichain(int n) { return from_pairs(n, {}); }

Order Order::by_inclusion(const std::vector<ElementSet>& sets) {
  int n = static_cast<int>(sets.size());
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = sets[i].subset_of(sets[j]);
  return Order(std::move(m));
}

ElementSet Order::down(int p) const {
  ElementSet s;
  for (int i = 0; i < size(); ++i)
    if (leq_[i][p]) s.insert(i);
  return s;
}

ElementSet Order::up(int p) const {
  ElementSet s;
  for (int i = 0; i < size(); ++i)
    if (leq_[p][i]) s.insert(i);
  return s;
}

int Order::supremum(const ElementSet& x) const {
  ElementSet ub = ElementSet::full(size());
  x.for_each([&](int i) { ub &= up(i); });
  int found = -1;
  ub.for_each([&](int c) {
    if (found < 0 && ub.subset_of(up(c))) found = c;
  });
  return found;
}

// ------------------------------------------------------------- ClosureSpace

struct OracleMemo {
  std::mutex mutex;
  std::unordered_map<ElementSet, ElementSet, ElementSetHash> table;
};

ClosureSpace ClosureSpace::implications(GroundSet ground, std::vector<Rule> rules) {
  ClosureSpace s;
  s.ground_ = std::move(ground);
  s.backend_ = Backend::Implications;
  int n = s.size();
  s.watch_.assign(n, {});
  ElementSet all = s.full();
  for (int r = 0; r < static_cast<int>(rules.size()); ++r) {
    const Rule& rule = rules[r];
    if (rule.conclusion < 0 || rule.conclusion >= n || !rule.premise.subset_of(all))
      throw Error(ErrorCode::IndexOutOfRange, "rule refers to an element outside the ground set");
    if (rule.premise.empty())
      throw Error(ErrorCode::InvalidSpace, "rule with empty premise violates closure(empty)=empty");
    if (rule.premise.contains(rule.conclusion))
      throw Error(ErrorCode::InvalidSpace, "rule conclusion " + s.ground_.label(rule.conclusion) +
                                               " already belongs to its premise");
    rule.premise.for_each([&](int e) { s.watch_[e].push_back(r); });
  }
  s.rules_ = std::move(rules);
  return s;
}

ClosureSpace ClosureSpace::intersections(GroundSet ground, std::vector<ElementSet> generators) {
  ClosureSpace s;
  s.ground_ = std::move(ground);
  s.backend_ = Backend::Intersections;
  ElementSet all = s.full();
  for (const auto& g : generators)
    if (!g.subset_of(all))
      throw Error(ErrorCode::IndexOutOfRange, "generator outside the ground set");
  s.generators_ = std::move(generators);
  if (s.size() > 0 && !s.closure(ElementSet{}).empty())
    throw Error(ErrorCode::InvalidSpace, "the empty set is not an intersection of generators");
  return s;
}

ClosureSpace ClosureSpace::oracle(GroundSet ground, OracleFn fn) {
  ClosureSpace s;
  s.ground_ = std::move(ground);
  s.backend_ = Backend::Oracle;
  s.oracle_ = std::move(fn);
  s.memo_ = std::make_shared<OracleMemo>();
  if (!s.closure(ElementSet{}).empty())
    throw Error(ErrorCode::InvalidSpace, "oracle closure of the empty set is not empty");
  return s;
}

void ClosureSpace::check_range(const ElementSet& x) const {
  if (!x.subset_of(full()))
    throw Error(ErrorCode::IndexOutOfRange, "subset refers to an element outside the ground set");
}

ElementSet ClosureSpace::closure_implications(const ElementSet& x) const {
  ElementSet c = x;
  int stack[kMaxElements];
  int top = 0;
  x.for_each([&](int e) { stack[top++] = e; });
  while (top > 0) {
    int e = stack[--top];
    for (int r : watch_[e]) {
      const Rule& rule = rules_[r];
      if (!c.contains(rule.conclusion) && rule.premise.subset_of(c)) {
        c.insert(rule.conclusion);
        stack[top++] = rule.conclusion;
      }
    }
  }
  return c;
}

ElementSet ClosureSpace::closure(const ElementSet& x) const {
  check_range(x);
  switch (backend_) {
    case Backend::Implications:
      return closure_implications(x);
    case Backend::Intersections: {
      ElementSet c = full();
      for (const auto& g : generators_)
        if (x.subset_of(g)) c &= g;
      return c;
    }
    case Backend::Oracle: {
      {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        auto it = memo_->table.find(x);
        if (it != memo_->table.end()) return it->second;
      }
      ElementSet c;
      try {
        c = oracle_(x);
      } catch (const Error&) {
        throw;
      } catch (const std::exception& e) {
        throw Error(ErrorCode::BackendFailure, e.what());
      }
      if (!x.subset_of(c) || !c.subset_of(full()))
        throw Error(ErrorCode::BackendFailure, "oracle result is not an extension of its argument");
      std::lock_guard<std::mutex> lock(memo_->mutex);
      memo_->table.emplace(x, c);
      return c;
    }
  }
  return x;
}

ElementSet ClosureSpace::interior(const ElementSet& x) const {
  check_range(x);
  int n = size();
  return closure(x.complement(n)).complement(n);
}

std::vector<ElementSet> ClosureSpace::minimal_coverings(int p) const {
  if (p < 0 || p >= size()) throw Error(ErrorCode::IndexOutOfRange, "element out of range");
  if (coverings_) return coverings_(p);
  return generic_minimal_coverings(*this, p);
}

// --------------------------------------------------------------- operations

Classification classify(const ClosureSpace& space, const ElementSet& x) {
  Classification c;
  ElementSet cl = space.closure(x);
  ElementSet in = space.interior(x);
  c.closed = cl == x;
  c.open = in == x;
  c.clopen = c.closed && c.open;
  c.regular_closed = space.closure(in) == x;
  c.regular_open = space.interior(cl) == x;
  return c;
}

ElementSet orthogonal(const ClosureSpace& space, const ElementSet& x) {
  return space.closure(x.complement(space.size()));
}

void check_bound(const ClosureSpace& space, int bound) {
  if (space.size() > bound)
    throw Error(ErrorCode::GroundTooLarge,
                "ground set has " + std::to_string(space.size()) +
                    " elements, above the enumeration bound " + std::to_string(bound) +
                    "; use local operations (classify, is_minimal_neighborhood) instead");
}

void for_each_closed(const ClosureSpace& space, const std::function<void(const ElementSet&)>& f,
                     int bound) {
  check_bound(space, bound);
  int n = space.size();
  ElementSet all = space.full();
  ElementSet a = space.closure(ElementSet{});
  f(a);
  ElementSet prefix;  // elements 0..i-1
  while (a != all) {
    bool advanced = false;
    for (int i = n - 1; i >= 0; --i) {
      if (a.contains(i)) continue;
      ElementSet below = ElementSet::full(i);
      ElementSet base = a & below;
      base.insert(i);
      ElementSet b = space.closure(base);
      if ((b & below) == (a & below)) {
        a = b;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    f(a);
  }
}

std::vector<ElementSet> enumerate_closed(const ClosureSpace& space, int bound) {
  std::vector<ElementSet> out;
  for_each_closed(space, [&](const ElementSet& c) { out.push_back(c); }, bound);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSet> regular_closed_sets(const ClosureSpace& space, int bound) {
  std::unordered_set<ElementSet, ElementSetHash> seen;
  int n = space.size();
  for_each_closed(space, [&](const ElementSet& c) { seen.insert(space.closure(c.complement(n))); },
                  bound);
  std::vector<ElementSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSet> enumerate_clopen(const ClosureSpace& space, int bound) {
  std::vector<ElementSet> closed = enumerate_closed(space, bound);
  std::unordered_set<ElementSet, ElementSetHash> set(closed.begin(), closed.end());
  int n = space.size();
  std::vector<ElementSet> out;
  for (const auto& c : closed)
    if (set.count(c.complement(n))) out.push_back(c);
  return out;
}

std::vector<ElementSet> copoints(const ClosureSpace& space, int p) {
  std::vector<ElementSet> out;
  int n = space.size();
  for_each_closed(
      space,
      [&](const ElementSet& c) {
        if (c.contains(p)) return;
        bool maximal = true;
        for (int q = 0; q < n && maximal; ++q) {
          if (q == p || c.contains(q)) continue;
          ElementSet d = c;
          d.insert(q);
          if (!space.closure(d).contains(p)) maximal = false;
        }
        if (maximal) out.push_back(c);
      },
      std::max(kDefaultBound, n));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<ElementSet> minimize(std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ElementSet> out;
  for (const auto& s : sets) {
    bool redundant = false;
    for (const auto& t : out)
      if (t.subset_of(s)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<ElementSet> generic_minimal_coverings(const ClosureSpace& space, int p) {
  int n = space.size();
  std::vector<ElementSet> transversals{ElementSet{}};
  for (const auto& m : copoints(space, p)) {
    ElementSet edge = m.complement(n);
    std::vector<ElementSet> next;
    for (const auto& t : transversals) {
      if (t.intersects(edge)) {
        next.push_back(t);
        continue;
      }
      edge.for_each([&](int e) {
        ElementSet u = t;
        u.insert(e);
        next.push_back(u);
      });
    }
    transversals = minimize(std::move(next));
  }
  return transversals;
}

Verdict is_minimal_neighborhood(const ClosureSpace& space, const ElementSet& u, int p,
                                const std::vector<ElementSet>& coverings) {
  if (p < 0 || p >= space.size()) return Verdict::no("element out of range");
  if (!u.subset_of(space.full())) return Verdict::no("set out of range");
  if (!space.is_open(u)) return Verdict::no("NotOpen: the set is not open");
  if (!u.contains(p)) return Verdict::no("NotNeighborhood: the element is not in the set");
  std::string failing;
  u.for_each([&](int x) {
    if (!failing.empty()) return;
    for (const auto& c : coverings)
      if ((c & u) == ElementSet::singleton(x)) return;
    failing = space.ground().label(x);
  });
  if (!failing.empty())
    return Verdict::no("no minimal covering meets the set exactly in " + failing);
  return Verdict::yes();
}

Verdict is_minimal_neighborhood(const ClosureSpace& space, const ElementSet& u, int p) {
  if (p < 0 || p >= space.size()) return Verdict::no("element out of range");
  return is_minimal_neighborhood(space, u, p, space.minimal_coverings(p));
}

std::vector<ElementSet> minimal_neighborhoods(const ClosureSpace& space, int p, int bound) {
  check_bound(space, bound);
  int n = space.size();
  std::vector<ElementSet> out;
  for (const auto& m : copoints(space, p)) out.push_back(m.complement(n));
  std::sort(out.begin(), out.end());
  return out;
}

bool has_poset_type(const ClosureSpace& space, const Order& ord) {
  if (ord.size() != space.size()) return false;
  for (int p = 0; p < space.size(); ++p) {
    ElementSet below = ord.down(p);
    for (const auto& x : space.minimal_coverings(p))
      if (!x.subset_of(below)) return false;
  }
  return true;
}

bool has_semilattice_type(const ClosureSpace& space, const Order& ord) {
  if (ord.size() != space.size()) return false;
  for (int p = 0; p < space.size(); ++p)
    for (const auto& x : space.minimal_coverings(p))
      if (ord.supremum(x) != p) return false;
  return true;
}

bool is_convex_geometry(const ClosureSpace& space, int bound) {
  int n = space.size();
  bool ok = true;
  for_each_closed(
      space,
      [&](const ElementSet& x) {
        if (!ok) return;
        std::vector<ElementSet> ext;
        for (int p = 0; p < n; ++p) {
          if (x.contains(p)) continue;
          ElementSet y = x;
          y.insert(p);
          ext.push_back(space.closure(y));
        }
        std::sort(ext.begin(), ext.end());
        if (std::adjacent_find(ext.begin(), ext.end()) != ext.end()) ok = false;
      },
      bound);
  return ok;
}

ElementSet extreme_points(const ClosureSpace& space, const ElementSet& a) {
  ElementSet out;
  a.for_each([&](int x) {
    ElementSet rest = a;
    rest.erase(x);
    if (!space.closure(rest).contains(x)) out.insert(x);
  });
  return out;
}

namespace {

bool clopen_search(const ClosureSpace& space, ElementSet in, ElementSet out, ElementSet& found) {
  ElementSet all = space.full();
  for (;;) {
    for (;;) {
      ElementSet in2 = space.closure(in);
      ElementSet out2 = space.closure(out);
      if (in2.intersects(out2)) return false;
      if (in2 == in && out2 == out) break;
      in = in2;
      out = out2;
    }
    // Failed-literal probing.
    bool changed = false;
    ElementSet open_elems = all - in - out;
    for (int e : open_elems.members()) {
      if (in.contains(e) || out.contains(e)) continue;
      ElementSet with_in = in, with_out = out;
      with_in.insert(e);
      with_out.insert(e);
      bool in_fails = space.closure(with_in).intersects(out);
      bool out_fails = space.closure(with_out).intersects(in);
      if (in_fails && out_fails) return false;
      if (in_fails) {
        out.insert(e);
        changed = true;
      } else if (out_fails) {
        in.insert(e);
        changed = true;
      }
    }
    if (!changed) break;
  }
  ElementSet undecided = all - in - out;
  if (undecided.empty()) {
    found = in;
    return true;
  }
  int e = undecided.first();
  ElementSet in_e = in;
  in_e.insert(e);
  if (clopen_search(space, in_e, out, found)) return true;
  ElementSet out_e = out;
  out_e.insert(e);
  return clopen_search(space, in, out_e, found);
}

}  // namespace

std::optional<ElementSet> find_clopen_between(const ClosureSpace& space, const ElementSet& lower,
                                              const ElementSet& upper) {
  if (!lower.subset_of(upper)) return std::nullopt;
  ElementSet found;
  if (clopen_search(space, lower, upper.complement(space.size()), found)) return found;
  return std::nullopt;
}

SpaceWithOrder transitive_relation_space(int n, const std::vector<std::pair<int, int>>& e,
                                         const std::vector<std::string>& vertex_labels) {
  auto vlabel = [&](int v) {
    return vertex_labels.empty() ? std::to_string(v) : vertex_labels.at(v);
  };
  std::vector<std::pair<int, int>> pairs(e);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::map<std::pair<int, int>, int> index;
  std::vector<std::string> labels;
  for (auto [x, y] : pairs) {
    if (x < 0 || y < 0 || x >= n || y >= n)
      throw Error(ErrorCode::IndexOutOfRange, "pair outside the vertex range");
    index[{x, y}] = static_cast<int>(labels.size());
    labels.push_back("(" + vlabel(x) + "," + vlabel(y) + ")");
  }
  for (auto [x, y] : pairs) {
    if (x != y && index.count({y, x}))
      throw Error(ErrorCode::NotAntisymmetric, "both (" + vlabel(x) + "," + vlabel(y) +
                                                   ") and its reverse belong to the relation");
    for (auto [y2, z] : pairs)
      if (y2 == y && !index.count({x, z}))
        throw Error(ErrorCode::NotTransitive,
                    "(" + vlabel(x) + "," + vlabel(z) + ") is missing from the relation");
  }
  std::vector<Rule> rules;
  for (auto [x, y] : pairs)
    for (auto [y2, z] : pairs) {
      if (y2 != y) continue;
      int a = index[{x, y}], b = index[{y, z}], c = index[{x, z}];
      if (c == a || c == b) continue;
      rules.push_back({ElementSet{a, b}, c});
    }
  auto related = [&](int u, int v) { return u == v || index.count({u, v}) > 0; };
  int m = static_cast<int>(pairs.size());
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto [x, y] = pairs[i];
      auto [x2, y2] = pairs[j];
      leq[i][j] = related(x2, x) && related(y, y2);
    }
  return {ClosureSpace::implications(GroundSet(labels), std::move(rules)), Order(std::move(leq))};
}

ClosureSpace up_closure_space(const Order& ord, const std::vector<std::string>& labels) {
  int n = ord.size();
  std::vector<Rule> rules;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && ord.leq(x, y)) rules.push_back({ElementSet::singleton(x), y});
  GroundSet g = labels.empty() ? GroundSet::numbered(n) : GroundSet(labels);
  return ClosureSpace::implications(std::move(g), std::move(rules));
}

}  // namespace regcl
