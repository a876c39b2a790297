#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nearprim/limits.hpp"

namespace nearprim::cli {

/// Exit codes shared by every command.
enum Exit : int { ok = 0, input_error = 1, mismatch = 2, resource = 3 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Claim {
  std::string scenario;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Overrides for the scenario inputs, keyed by scenario name
/// ("z4-small", "z4-large", "z7", "z15"). Values are scheme documents.
using Fixtures = std::vector<std::pair<std::string, nlohmann::json>>;

/// Runs the four worked scenarios and returns one entry per claim.
std::vector<Claim> paper_examples(const Fixtures& fixtures, const Limits& limits);

}  // namespace nearprim::cli
