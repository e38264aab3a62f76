#include "pgog/hom.hpp"

#include <algorithm>

#include "pgog/closure.hpp"
#include "pgog/error.hpp"

namespace pgog {

GroupHom::GroupHom(std::vector<std::string> source_generators, ModelPtr target,
                   std::vector<Element> images)
    : source_(std::move(source_generators)), target_(std::move(target)), images_(std::move(images)) {
  if (!target_) throw Error("homomorphism needs a target model");
  if (images_.size() != source_.size()) {
    throw Error("homomorphism needs exactly one image per source generator");
  }
  for (Element const& e : images_) {
    if (!target_->owns(e)) throw Error("homomorphism image outside " + target_->name());
  }
}

GroupHom GroupHom::from_words(std::vector<std::string> source_generators, ModelPtr target,
                              std::map<std::string, std::string> const& images) {
  FinitePresentation names(target->generator_names());
  std::vector<Element> im;
  for (auto const& s : source_generators) {
    auto it = images.find(s);
    if (it == images.end()) throw Error("no image given for generator '" + s + "'");
    im.push_back(evaluate(names.word(it->second), *target, target->generators()));
  }
  for (auto const& [k, v] : images) {
    if (std::find(source_generators.begin(), source_generators.end(), k) ==
        source_generators.end()) {
      throw Error("image given for unknown generator '" + k + "'");
    }
  }
  return GroupHom(std::move(source_generators), std::move(target), std::move(im));
}

GroupHom GroupHom::by_names(std::vector<std::string> source_generators, ModelPtr target) {
  std::vector<Element> im;
  for (auto const& s : source_generators) im.push_back(target->generator(s));
  return GroupHom(std::move(source_generators), std::move(target), std::move(im));
}

GroupHom GroupHom::trivial(std::vector<std::string> source_generators, ModelPtr target) {
  std::vector<Element> im(source_generators.size(), target->identity());
  return GroupHom(std::move(source_generators), std::move(target), std::move(im));
}

Element const& GroupHom::image(std::size_t gen) const {
  if (gen >= images_.size()) {
    throw Error("generator " + std::to_string(gen) + " is not mapped by the homomorphism");
  }
  return images_[gen];
}

Element evaluate(Word const& w, FiniteGroupModel const& model, std::span<Element const> images) {
  Element acc = model.identity();
  for (Letter const& l : w.letters()) {
    if (l.gen >= images.size()) {
      throw Error("generator " + std::to_string(l.gen) + " is not mapped");
    }
    acc = model.multiply(acc, model.power(images[l.gen], l.exp));
  }
  return acc;
}

Element evaluate(Word const& w, GroupHom const& hom) {
  return evaluate(w, *hom.target(), hom.images());
}

std::vector<std::size_t> violated_relators(FinitePresentation const& pres, GroupHom const& hom) {
  std::vector<std::size_t> bad;
  Element const e = hom.target()->identity();
  for (std::size_t i = 0; i < pres.relators().size(); ++i) {
    if (evaluate(pres.relators()[i], hom) != e) bad.push_back(i);
  }
  return bad;
}

ModelCheck check_model_satisfies(FinitePresentation const& pres, ModelPtr const& model,
                                 GroupHom const& naming) {
  if (naming.target() != model) throw Error("naming must target the checked model");
  if (naming.source_generators() != pres.generators()) {
    throw Error("naming must map exactly the presentation generators");
  }
  ModelCheck out;
  for (std::size_t i : violated_relators(pres, naming)) {
    out.violated_relators.push_back(pres.to_string(pres.relators()[i]));
  }
  out.image_order = closure(*model, naming.images()).order();
  out.model_order = closure_order(*model);
  return out;
}

bool hom_injective_on(GroupHom const& hom, FiniteGroupModel const& source,
                      std::span<Word const> subgroup) {
  if (source.generators().size() != hom.source_generators().size()) {
    throw Error("hom must be defined on the source model's generators");
  }
  std::vector<Element> src, img;
  for (Word const& w : subgroup) {
    src.push_back(evaluate(w, source, source.generators()));
    img.push_back(evaluate(w, hom));
  }
  return closure(source, src).order() == closure(*hom.target(), img).order();
}

bool hom_injective_on(GroupHom const& hom, FiniteGroupModel const& source,
                      std::span<Element const> subgroup) {
  ClosureTable full = closure(source, source.generators());
  std::vector<Word> words;
  for (Element const& e : subgroup) words.push_back(full.word_of(e));
  return hom_injective_on(hom, source, std::span<Word const>(words));
}

bool is_homomorphism(FiniteGroupModel const& source, GroupHom const& hom) {
  ClosureTable table = closure(source, source.generators());
  std::vector<Element> phi;
  phi.reserve(table.order());
  for (std::size_t i = 0; i < table.order(); ++i) phi.push_back(evaluate(table.word_at(i), hom));
  auto const& target = *hom.target();
  for (std::size_t i = 0; i < table.order(); ++i) {
    for (std::size_t g = 0; g < source.generators().size(); ++g) {
      Element ag = source.multiply(table.elements()[i], source.generators()[g]);
      if (phi[table.index_of(ag)] != target.multiply(phi[i], hom.image(g))) return false;
    }
  }
  return true;
}

}  // namespace pgog
