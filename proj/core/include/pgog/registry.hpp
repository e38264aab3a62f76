#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgog/check.hpp"
#include "pgog/report.hpp"

namespace pgog {

/// Overrides for registry runs; unset fields use each example's defaults.
struct ExampleParams {
  std::uint32_t p = 2;
  std::optional<std::uint32_t> n;
  std::optional<std::uint32_t> m;
  std::optional<std::uint32_t> max_level;
};

struct ExampleEntry {
  std::string id;
  std::string anchor;    // the construction this entry reproduces
  std::string expected;  // what a passing run shows
  std::function<std::vector<Check>(ExampleParams const&)> run;
};

std::vector<ExampleEntry> const& example_registry();

/// Words of the J-level family with known nontrivial image.
std::vector<std::string> const& separation_suite();

/// Shell-style match supporting '*' and '?'.
bool glob_match(std::string_view pattern, std::string_view text);

/// Throws Error for an unregistered id.
Report run_example(std::string_view id, ExampleParams const& params = {});
/// Runs every matching entry (in parallel) and concatenates the checks in
/// registry order. Check names are prefixed with the entry id.
Report run_all(std::string_view filter, ExampleParams const& params = {});

}  // namespace pgog
