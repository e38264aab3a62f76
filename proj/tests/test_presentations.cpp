#include <gtest/gtest.h>

#include "pgog/closure.hpp"
#include "pgog/coset_enumeration.hpp"
#include "pgog/hom.hpp"
#include "pgog/models.hpp"
#include "pgog/presentation.hpp"

using namespace pgog;

namespace {

FinitePresentation parse(std::vector<std::string> gens, std::vector<std::string> rels) {
  FinitePresentation pres(std::move(gens));
  for (auto const& r : rels) pres.add_relator(pres.word(r));
  return pres;
}

}  // namespace

TEST(Presentation, RelationDesugarsToRelator) {
  FinitePresentation pres({"a", "b", "c"});
  pres.add_relation(pres.word("[a,b]"), pres.word("c"));
  ASSERT_EQ(pres.relators().size(), 1u);
  EXPECT_EQ(pres.relators()[0], pres.word("c^-1 a^-1 b^-1 a b"));
}

TEST(Presentation, DuplicateGeneratorRejected) {
  FinitePresentation pres({"a"});
  EXPECT_ANY_THROW(pres.add_generator("a"));
}

TEST(Presentation, ModPRank) {
  EXPECT_EQ(mod_p_rank(parse({"a", "b"}, {"a^2", "b^2", "[a,b]"}), 2), 2u);
  EXPECT_EQ(mod_p_rank(parse({"a", "b"}, {"a^3", "b^3"}), 2), 0u);
  EXPECT_EQ(mod_p_rank(parse({"a", "b", "c"}, {"c^-1 a b"}), 3), 2u);
  EXPECT_EQ(mod_p_rank(*make_heisenberg(3)->presentation(), 3), 2u);
}

TEST(Presentation, RankModP) {
  EXPECT_EQ(rank_mod_p({{2, 0}, {0, 2}}, 2), 0u);
  EXPECT_EQ(rank_mod_p({{1, 1}, {1, -1}}, 2), 1u);
  EXPECT_EQ(rank_mod_p({{1, 1}, {1, -1}}, 3), 2u);
}

TEST(Presentation, GeneratesModFrattini) {
  auto pres = parse({"a", "b", "c"}, {"c^-1 [a,b]"});
  EXPECT_TRUE(generates_mod_frattini(pres, 2, {0, 1}));
  EXPECT_FALSE(generates_mod_frattini(pres, 2, {0, 2}));
}

TEST(CosetEnumeration, CompletesOnKnownGroups) {
  EXPECT_EQ(coset_enumerate(*make_heisenberg(2)->presentation()).index(), 8u);
  EXPECT_EQ(coset_enumerate(*make_heisenberg(3)->presentation()).index(), 27u);
  EXPECT_EQ(coset_enumerate(*make_gn(2, 1)->presentation()).index(), 16u);
  EXPECT_EQ(coset_enumerate(*make_lamplighter(2, 2)->presentation()).index(), 64u);
  auto a5 = parse({"a", "b"}, {"a^2", "b^3", "(a b)^5"});
  CosetTable t = coset_enumerate(a5);
  EXPECT_TRUE(t.complete());
  EXPECT_EQ(t.index(), 60u);
}

TEST(CosetEnumeration, IndexEqualsClosureOrder) {
  for (ModelPtr m : {make_gn(2, 1), make_gn(2, 2), make_fn(2, 2), make_gn(3, 1)}) {
    CosetTable t = coset_enumerate(*m->presentation());
    ASSERT_TRUE(t.complete()) << m->name();
    EXPECT_EQ(t.index(), closure_order(*m)) << m->name();
  }
}

TEST(CosetEnumeration, SubgroupIndex) {
  auto a5 = parse({"a", "b"}, {"a^2", "b^3", "(a b)^5"});
  std::vector<Word> sub{a5.word("a"), a5.word("b")};
  EXPECT_EQ(coset_enumerate(a5, sub).index(), 1u);
  std::vector<Word> cyc{a5.word("b")};
  EXPECT_EQ(coset_enumerate(a5, cyc).index(), 20u);
}

TEST(CosetEnumeration, ActionIsAPermutation) {
  auto pres = *make_heisenberg(2)->presentation();
  CosetTable t = coset_enumerate(pres);
  ASSERT_TRUE(t.complete());
  for (std::size_t g = 0; g < pres.generator_count(); ++g) {
    std::vector<bool> hit(t.index());
    for (std::size_t c = 0; c < t.index(); ++c) hit[t.act(c, 2 * g)] = true;
    for (bool h : hit) EXPECT_TRUE(h);
    for (std::size_t c = 0; c < t.index(); ++c) EXPECT_EQ(t.act(t.act(c, 2 * g), 2 * g + 1), c);
  }
}

TEST(CosetEnumeration, InfiniteGroupIsInconclusive) {
  auto free_abelian = parse({"a", "b"}, {"[a,b]"});
  CosetTable t = coset_enumerate(free_abelian, {}, 200);
  EXPECT_FALSE(t.complete());
  EXPECT_EQ(t.status, EnumerationStatus::inconclusive);
}

TEST(CosetEnumeration, CapReportsInconclusive) {
  CosetTable t = coset_enumerate(*make_gn(2, 2)->presentation(), {}, 20);
  EXPECT_EQ(t.status, EnumerationStatus::inconclusive);
}

TEST(Hom, ModelCheckDetectsMissingGenerator) {
  ModelPtr H = make_heisenberg(2);
  FinitePresentation pres({"x", "y"});
  pres.add_relator(pres.word("x^2"));
  pres.add_relator(pres.word("y^2"));
  auto naming = GroupHom::from_words({"x", "y"}, H, {{"x", "x"}, {"y", "x"}});
  ModelCheck mc = check_model_satisfies(pres, H, naming);
  EXPECT_TRUE(mc.relators_hold());
  EXPECT_FALSE(mc.generates());
  EXPECT_EQ(mc.image_order, 2u);
}

TEST(Hom, InjectivityOnSubgroups) {
  ModelPtr H = make_heisenberg(2);
  ModelPtr A = make_elementary_abelian(2, {"x", "y"});
  auto abelianise = GroupHom::by_names(H->generator_names(), A);
  std::vector<Word> whole{Word::generator(0), Word::generator(1)};
  std::vector<Word> one{Word::generator(0)};
  EXPECT_FALSE(hom_injective_on(abelianise, *H, whole));
  EXPECT_TRUE(hom_injective_on(abelianise, *H, one));
  EXPECT_TRUE(is_homomorphism(*H, abelianise));
}
