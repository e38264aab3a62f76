#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pgog/presentation.hpp"
#include "pgog/word.hpp"

namespace pgog {

enum class EnumerationStatus { complete, inconclusive };

/// Result of a Todd-Coxeter run. Rows are live cosets renumbered in
/// creation order; columns are 2g (generator g) and 2g+1 (its inverse).
struct CosetTable {
  EnumerationStatus status = EnumerationStatus::inconclusive;
  std::size_t generator_count = 0;
  std::vector<std::vector<std::size_t>> rows;
  /// Cosets defined over the whole run, including ones later identified.
  std::size_t total_defined = 0;

  bool complete() const noexcept { return status == EnumerationStatus::complete; }
  /// Index of the subgroup; the group order when enumerating over {1}.
  std::size_t index() const noexcept { return rows.size(); }
  std::size_t act(std::size_t coset, std::size_t column) const { return rows[coset][column]; }
};

/// HLT coset enumeration with a lookahead pass when the table fills.
/// Relators are scanned in declaration order and cosets in creation order,
/// so identical inputs give identical tables. Running out of room is
/// reported as inconclusive, never as a verdict about the group.
CosetTable coset_enumerate(FinitePresentation const& pres, std::span<Word const> subgroup = {},
                           std::size_t max_cosets = 1'000'000);

}  // namespace pgog
