#pragma once

#include "lbp/report.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lbp {

inline constexpr std::size_t kDefaultVerifyOrder = 12;

const std::vector<std::string>& scenario_ids();

// Runs one named invariant suite. "all" runs every suite (concurrently) and
// prefixes each check with its suite id. Throws UsageError for unknown ids or
// an order below 8.
ScenarioReport run_scenario(std::string_view id, std::size_t order = kDefaultVerifyOrder);

}  // namespace lbp
