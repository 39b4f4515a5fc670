#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace regcl::verify {

struct ClaimResult {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  bool passed = false;
  double seconds = 0;
  double time_limit = 0;  // seconds; enforced by the acceptance runner
};

struct Options {
  std::uint64_t seed = 1;
  int bound = 24;
  int jobs = 1;
  std::string filter;  // substring of the claim id; empty runs all
};

std::vector<std::string> claim_ids();
// Results ordered by claim id position, regardless of completion order.
std::vector<ClaimResult> run(const Options& opt);

std::string to_text(const std::vector<ClaimResult>& results, bool timings);
nlohmann::json to_json(const std::vector<ClaimResult>& results, const Options& opt, bool timings);

}  // namespace regcl::verify
