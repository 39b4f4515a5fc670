// Runs every acceptance criterion and prints one line per criterion.
#include <cstdio>
#include <string>
#include <vector>

#include "regcl/verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* claim;
  double limit;  // seconds
};

// Counts are exact; these wall-clock limits are the only tolerances.
const Criterion kCriteria[] = {
    {1, "s4-counts", 10},       {2, "k4-counts", 30},          {3, "small-permutohedra", 30},
    {4, "star3-count", 10},     {5, "rsd1-failure", 30},       {6, "m3-minus", 10},
    {7, "nonopen-ji", 10},      {8, "k33e", 5},                {9, "k7", 30},
    {10, "property-sweep", 300}, {11, "lattice-criterion", 300}, {12, "convex-sweep", 60},
    {13, "orthoposet-space", 30},          {14, "poset-clop-gap", 10},
};

}  // namespace

int main() {
  regcl::verify::Options opt;
  auto results = regcl::verify::run(opt);
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    const regcl::verify::ClaimResult* r = nullptr;
    for (const auto& x : results)
      if (x.id == c.claim) r = &x;
    if (!r) {
      std::printf("FAIL %2d %-20s missing\n", c.number, c.claim);
      ++failures;
      continue;
    }
    bool ok = r->passed && r->seconds <= c.limit;
    failures += !ok;
    std::printf("%s %2d %-20s %.2fs (limit %.0fs) expected: %s; computed: %s\n", ok ? "PASS" : "FAIL", c.number,
                c.claim, r->seconds, c.limit, r->expected.c_str(), r->computed.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(kCriteria)) - failures, std::size(kCriteria));
  return failures ? 1 : 0;
}
