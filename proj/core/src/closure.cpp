#include "pgog/closure.hpp"

#include "pgog/error.hpp"

namespace pgog {

std::size_t ClosureTable::index_of(Element const& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw Error("element " + to_string(e) + " is not in the closure");
  return it->second;
}

Word const& ClosureTable::word_of(Element const& e) const { return words_[index_of(e)]; }

ClosureTable closure(FiniteGroupModel const& model, std::span<Element const> generators,
                     std::size_t bound) {
  for (Element const& g : generators) {
    if (!model.owns(g)) throw Error("closure generator does not belong to " + model.name());
  }
  ClosureTable t;
  Element e = model.identity();
  t.index_.emplace(e, 0);
  t.elements_.push_back(e);
  t.words_.emplace_back();
  for (std::size_t head = 0; head < t.elements_.size(); ++head) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      Element next = model.multiply(t.elements_[head], generators[g]);
      if (t.index_.contains(next)) continue;
      if (t.elements_.size() >= bound) {
        throw SizeGuardExceeded("closure in " + model.name() + " exceeds " +
                                std::to_string(bound) + " elements");
      }
      t.index_.emplace(next, t.elements_.size());
      t.words_.push_back(t.words_[head] * Word::generator(g));
      t.elements_.push_back(std::move(next));
    }
  }
  return t;
}

std::size_t closure_order(FiniteGroupModel const& model, std::size_t bound) {
  return closure(model, model.generators(), bound).order();
}

}  // namespace pgog
