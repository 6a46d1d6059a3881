#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "rta/kernels.hpp"

namespace rta {

struct CheckContext {
  std::uint64_t seed = 0x51f7ed15ULL;
  Exec exec = Exec::parallel;
};

// Outcome of one named check. All comparisons behind `pass` are exact;
// `computed` and `expected` are printable summaries of both sides.
struct CheckResult {
  std::string id;
  bool pass = false;
  double seconds = 0.0;
  std::string computed;
  std::string expected;
  std::string note;

  nlohmann::json to_json() const;
};

// registry order; `verify all` runs these in sequence
const std::vector<std::string>& check_ids();

// throws ParseError on an unknown id
CheckResult run_check(const std::string& id, const CheckContext& ctx = {});

}  // namespace rta
