#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pgog {

enum class Status { pass, fail, unknown, skip };

std::string_view to_string(Status s) noexcept;

/// One named verification outcome.
struct Check {
  std::string name;
  Status status = Status::pass;
  std::string details;
  std::vector<std::string> violations;

  bool failed() const noexcept { return status == Status::fail; }
};

/// pass when `violations` is empty, fail otherwise.
Check verdict(std::string name, std::vector<std::string> violations, std::string details = {});

}  // namespace pgog
