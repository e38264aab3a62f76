#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "pgog/models.hpp"
#include "pgog/prime_level.hpp"
#include "pgog/word.hpp"

namespace pgog {

/// The subgroup generated by a list of elements, enumerated breadth-first.
/// Each element carries its shortlex-least word over the generator list
/// (positive letters only; the group is finite).
class ClosureTable {
 public:
  std::size_t order() const noexcept { return elements_.size(); }
  /// Elements in discovery order; index 0 is the identity.
  std::vector<Element> const& elements() const noexcept { return elements_; }
  bool contains(Element const& e) const { return index_.contains(e); }
  /// Discovery index, which is the shortlex rank of the element's word.
  std::size_t index_of(Element const& e) const;
  Word const& word_of(Element const& e) const;
  Word const& word_at(std::size_t i) const { return words_[i]; }

 private:
  friend ClosureTable closure(FiniteGroupModel const&, std::span<Element const>, std::size_t);
  std::vector<Element> elements_;
  std::vector<Word> words_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
};

ClosureTable closure(FiniteGroupModel const& model, std::span<Element const> generators,
                     std::size_t bound = size_guard());

/// Order of the whole model, by closure on its named generators.
std::size_t closure_order(FiniteGroupModel const& model, std::size_t bound = size_guard());

}  // namespace pgog
