#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evalcode/distance.hpp"

namespace evalcode {

struct CheckRow {
  std::string group;  // example id, e.g. "3.4"
  std::string setting;  // field and parameters
  std::string name;
  std::string expected;
  std::string computed;
  bool ok = false;
};

// Groups of the reproduction table in run order.
const std::vector<std::string>& verify_groups();

// Seed used for the randomized builders of the table.
inline constexpr std::uint64_t verify_seed = 2024;

// Runs the table, or one group of it. Throws UnknownExample for an unknown group.
std::vector<CheckRow> verify_published(const std::optional<std::string>& only = std::nullopt,
                                   const SearchOptions& opts = {});

}  // namespace evalcode
