#include "regcl/spaces.hpp"

#include <functional>
#include <map>

namespace regcl::spaces {

namespace {

struct Implication {
  std::vector<std::string> premise;
  std::vector<std::string> conclusion;
};

ClosureSpace from_text(const std::vector<std::string>& labels, const std::vector<Implication>& imps) {
  GroundSet g(labels);
  std::vector<Rule> rules;
  for (const auto& imp : imps)
    for (const auto& c : imp.conclusion) rules.push_back({g.set_of(imp.premise), g.index(c)});
  return ClosureSpace::implications(g, std::move(rules));
}

}  // namespace

ClosureSpace m3_minus() { return from_text({"a", "b", "c", "1"}, {{{"a", "b", "c"}, {"1"}}}); }

Order m3_minus_order() { return Order::from_pairs(4, {{0, 3}, {1, 3}, {2, 3}}); }

ClosureSpace rsd1_failure() {
  return from_text({"a", "b", "c", "d", "e", "u"}, {
                                                       {{"c", "d", "u"}, {"a", "b", "e"}},
                                                       {{"a", "b", "u"}, {"e"}},
                                                       {{"c", "d", "e"}, {"a", "b"}},
                                                   });
}

ClosureSpace nonopen_ji() {
  return from_text({"a", "p0", "p1", "p", "q", "b0", "b1"}, {
                                                                {{"a", "p0"}, {"p"}},
                                                                {{"a", "p1"}, {"p"}},
                                                                {{"p0", "p1"}, {"q"}},
                                                                {{"b0", "b1"}, {"q"}},
                                                            });
}

ClosureSpace poset_clop_gap() {
  return from_text({"a0", "a1", "a", "top"}, {{{"a0", "a1"}, {"top"}}, {{"a"}, {"top"}}});
}

Order poset_clop_gap_order() { return Order::from_pairs(4, {{0, 3}, {1, 3}, {2, 3}}); }

ClosureSpace poset_not_semilattice() {
  return from_text({"p0", "p1", "q0", "q1"}, {{{"q0", "q1"}, {"p0", "p1"}}});
}

Order poset_not_semilattice_order() {
  return Order::from_pairs(4, {{2, 0}, {2, 1}, {3, 0}, {3, 1}});
}

namespace {
const std::map<std::string, std::function<ClosureSpace()>>& table() {
  static const std::map<std::string, std::function<ClosureSpace()>> t{
      {"m3-minus", m3_minus},
      {"rsd1-failure", rsd1_failure},
      {"nonopen-ji", nonopen_ji},
      {"poset-clop-gap", poset_clop_gap},
      {"poset-not-semilattice", poset_not_semilattice},
  };
  return t;
}
}  // namespace

ClosureSpace by_name(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw Error(ErrorCode::UnknownName, "no built-in space \"" + name + "\"");
  return it->second();
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

}  // namespace regcl::spaces
