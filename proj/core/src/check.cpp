#include "pgog/check.hpp"

namespace pgog {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::unknown: return "unknown";
    case Status::skip: return "skip";
  }
  return "unknown";
}

Check verdict(std::string name, std::vector<std::string> violations, std::string details) {
  Check c;
  c.name = std::move(name);
  c.status = violations.empty() ? Status::pass : Status::fail;
  c.details = std::move(details);
  c.violations = std::move(violations);
  return c;
}

}  // namespace pgog
