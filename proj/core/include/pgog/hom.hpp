#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pgog/models.hpp"
#include "pgog/presentation.hpp"
#include "pgog/word.hpp"

namespace pgog {

/// A map from a list of source generators (of a presentation or a model) to
/// elements of a target model.
class GroupHom {
 public:
  GroupHom(std::vector<std::string> source_generators, ModelPtr target,
           std::vector<Element> images);

  /// Images given by target generator words, e.g. {"k1" -> "k1", "z" -> "1"}.
  /// Every source generator must be mapped.
  static GroupHom from_words(std::vector<std::string> source_generators, ModelPtr target,
                             std::map<std::string, std::string> const& images);
  /// Each source generator goes to the target generator of the same name.
  static GroupHom by_names(std::vector<std::string> source_generators, ModelPtr target);
  /// Everything to the identity.
  static GroupHom trivial(std::vector<std::string> source_generators, ModelPtr target);

  std::vector<std::string> const& source_generators() const noexcept { return source_; }
  ModelPtr const& target() const noexcept { return target_; }
  std::vector<Element> const& images() const noexcept { return images_; }
  Element const& image(std::size_t gen) const;

 private:
  std::vector<std::string> source_;
  ModelPtr target_;
  std::vector<Element> images_;
};

/// Image of `w` under `hom`; throws on a generator id the hom does not map.
Element evaluate(Word const& w, GroupHom const& hom);

/// Evaluate a word directly in a model, reading generator ids as indices
/// into `images`.
Element evaluate(Word const& w, FiniteGroupModel const& model, std::span<Element const> images);

/// Relators of `pres` whose image under `hom` is not the identity.
std::vector<std::size_t> violated_relators(FinitePresentation const& pres, GroupHom const& hom);

struct ModelCheck {
  std::vector<std::string> violated_relators;
  std::size_t image_order = 0;
  std::size_t model_order = 0;

  bool relators_hold() const noexcept { return violated_relators.empty(); }
  bool generates() const noexcept { return image_order == model_order; }
  bool passed() const noexcept { return relators_hold() && generates(); }
};

/// Checks that the named elements of `model` satisfy every relator of
/// `pres` and generate the whole model.
ModelCheck check_model_satisfies(FinitePresentation const& pres, ModelPtr const& model,
                                 GroupHom const& naming);

/// True iff the subgroup of `source` generated by `subgroup` (words over
/// the hom's source generators, read in `source`) has the same order as its
/// image. `hom` must be a homomorphism on that subgroup.
bool hom_injective_on(GroupHom const& hom, FiniteGroupModel const& source,
                      std::span<Word const> subgroup);

/// Same, with subgroup generators given as source elements.
bool hom_injective_on(GroupHom const& hom, FiniteGroupModel const& source,
                      std::span<Element const> subgroup);

/// Checks phi(a g) = phi(a) phi(g) over the whole closure of `source`'s
/// generators, where phi is evaluation of the closure word. `hom` maps the
/// source model's generators (by position).
bool is_homomorphism(FiniteGroupModel const& source, GroupHom const& hom);

}  // namespace pgog
