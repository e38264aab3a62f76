#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgog/word.hpp"

namespace pgog {

/// Generators and relators. Every relator only mentions declared generators.
class FinitePresentation {
 public:
  FinitePresentation() = default;
  explicit FinitePresentation(std::vector<std::string> generators);

  std::size_t add_generator(std::string name);
  void add_relator(Word w);
  /// lhs = rhs, stored as rhs^-1 lhs.
  void add_relation(Word const& lhs, Word const& rhs);

  std::vector<std::string> const& generators() const noexcept { return generators_; }
  std::vector<Word> const& relators() const noexcept { return relators_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws pgog::Error on unknown names.
  std::size_t index_of(std::string_view name) const;

  Word word(std::string_view text) const;
  std::string to_string(Word const& w) const { return w.to_string(generators_); }

  /// Copy with every generator name prefixed by `prefix`.
  FinitePresentation prefixed(std::string const& prefix) const;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// Number of generators minus the F_p-rank of the relator exponent-sum
/// matrix: the dimension of the mod-p abelianization, i.e. the minimal
/// generator count of the pro-p completion.
std::size_t mod_p_rank(FinitePresentation const& pres, std::uint32_t p);

/// Rank over F_p of an integer matrix (rows reduced mod p).
std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::uint32_t p);

/// True iff the images of `subset` span the mod-p abelianization, i.e. they
/// generate the pro-p completion (Burnside basis theorem).
bool generates_mod_frattini(FinitePresentation const& pres, std::uint32_t p,
                            std::vector<std::size_t> const& subset);

}  // namespace pgog
