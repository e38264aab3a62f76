#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgog/graph_of_groups.hpp"
#include "pgog/models.hpp"
#include "pgog/presentation.hpp"

namespace pgog {

/// Builds a model from text such as "Gn(p=2,n=2)", "K(1)" or
/// "Product(Heisenberg(2), Abelian(2,1))". When p is omitted and
/// `default_p` is nonzero, p = default_p.
ModelPtr make_model(std::string_view text, std::uint32_t default_p = 0);

/// Names accepted by make_model, with their parameter lists.
std::vector<std::pair<std::string, std::string>> model_catalogue();

struct WitnessDecl {
  std::string name;
  ModelPtr target;
  std::map<std::string, std::string> images;  // "V.g" or edge name -> target word
};

struct DslDocument {
  std::uint32_t prime = 0;
  std::vector<std::pair<std::string, FinitePresentation>> presentations;
  std::optional<GraphOfGroups> graph;
  std::vector<WitnessDecl> witnesses;
  std::vector<std::pair<std::string, std::string>> words;

  FinitePresentation const* presentation(std::string_view name) const;
};

/// Parses the line-oriented format documented in docs/dsl.md. Errors carry
/// the line and column of the offending text (pgog::ParseError).
DslDocument parse_dsl(std::string_view text);
DslDocument parse_dsl_file(std::string const& path);

}  // namespace pgog
