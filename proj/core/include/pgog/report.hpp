#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pgog/analysis.hpp"
#include "pgog/check.hpp"
#include "pgog/graph_of_groups.hpp"
#include "pgog/separation.hpp"

namespace pgog {

/// Outcome of one CLI command or registry run.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Check> checks;
  /// Command-specific result as a serialized JSON value; empty when absent.
  std::string result;

  void add(Check c) { checks.push_back(std::move(c)); }
  void add_all(std::vector<Check> cs);
  /// 0 iff no check failed; unknown and skip do not count as failures.
  int exit_code() const noexcept;
};

std::string to_json(Report const& r, int indent = 2);
std::string to_text(Report const& r);

std::string result_json(CollapseReport const& r);
std::string result_json(BoundReport const& r);
std::string result_json(PropernessReport const& r);
std::string result_json(SeparationCertificate const& c);

}  // namespace pgog
