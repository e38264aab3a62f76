#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgog/graph_of_groups.hpp"
#include "pgog/presentation.hpp"
#include "pgog/word.hpp"

namespace pgog {

/// defined = [left, right] holds in the presented group.
struct BracketRule {
  std::size_t defined = 0;
  Word left;
  Word right;
  std::size_t relator = 0;  // source relator index
};

/// Rules read off relators of the shape g^-1 [X, Y] up to cyclic rotation
/// and inversion (each rotation is a conjugate of the relator).
std::vector<BracketRule> extract_bracket_rules(FinitePresentation const& pres);

struct CollapseReport {
  std::uint32_t p = 0;
  std::vector<std::string> generators;
  /// Lower bound on lower-central depth; nullopt means the generator lies
  /// in every term of the lower central series.
  std::vector<std::optional<std::size_t>> depth;
  std::vector<BracketRule> rules;
  std::vector<std::size_t> collapsed;
  FinitePresentation residual;
  std::size_t residual_rank = 0;

  bool diverges(std::size_t g) const { return !depth.at(g).has_value(); }
  std::vector<std::string> collapsed_names() const;
};

/// Marks as diverging the largest set D of generators such that each member
/// has a rule whose left or right side only uses generators of D. Every
/// member of D then lies in all gamma_d, so vanishes in any pro-p (indeed
/// any residually nilpotent) image. Other generators get the depth bound
/// depth(g) >= min depth(left) + min depth(right), iterated to a fixpoint.
CollapseReport detect_collapse(FinitePresentation const& pres, std::uint32_t p);

struct BoundReport {
  std::uint32_t p = 0;
  std::size_t edge_count = 0;
  std::uint64_t max_edge_order = 0;  // K
  std::size_t rank = 0;              // mod-p rank of the fundamental presentation
  double bound = 0;                  // pK/(p-1) (rk-1) + 1
  double edge_sum = 0;               // sum of 1/|G_e|
  double rank_side = 0;              // p/(p-1) rk
  bool bound_holds = false;
  bool edge_sum_holds = false;

  bool passed() const noexcept { return bound_holds && edge_sum_holds; }
};

/// Evaluates the edge-count bound and the edge-sum inequality for a graph
/// with a certified properness witness. Throws if the witness is not
/// certified, since the bound is only claimed for proper graphs.
BoundReport check_edge_bound(GraphOfGroups const& gog, PropernessReport const& witness,
                             std::uint32_t p);

/// Heisenberg groups G1..GN (generators a{n}, b{n}) joined by edges K2..KN,
/// K{n} = <u, v> from G{n-1} to G{n}: u -> b{n-1} | [a{n}, b{n}],
/// v -> [a{n-1}, b{n-1}] | a{n}.
GraphOfGroups heisenberg_chain(std::uint32_t p, std::uint32_t N);

/// G1 -H1- M -H2- G4 with M = G2 x G3, all Gi Heisenberg on x{i}, y{i}.
GraphOfGroups three_edge_example(std::uint32_t p);

}  // namespace pgog
