#include <gtest/gtest.h>

#include "pgog/error.hpp"
#include "pgog/presentation.hpp"
#include "pgog/word.hpp"

using namespace pgog;

namespace {

FinitePresentation abc() { return FinitePresentation({"a", "b", "c"}); }

}  // namespace

TEST(Word, FreeReductionIsEager) {
  Word w = Word::generator(0) * Word::generator(1) * Word::generator(1, -1) * Word::generator(0);
  EXPECT_EQ(w, Word::generator(0, 2));
  EXPECT_TRUE((w * w.inverse()).empty());
}

TEST(Word, CommutatorConvention) {
  auto pres = abc();
  Word a = Word::generator(0), b = Word::generator(1);
  EXPECT_EQ(Word::commutator(a, b), a.inverse() * b.inverse() * a * b);
  EXPECT_EQ(pres.word("[a,b]"), pres.word("a^-1 b^-1 a b"));
}

TEST(Word, ParseGrammar) {
  auto pres = abc();
  EXPECT_EQ(pres.word("(a b)^2"), pres.word("a*b*a*b"));
  EXPECT_EQ(pres.word("1"), Word{});
  EXPECT_EQ(pres.word("[[a,b],c]"), Word::commutator(pres.word("[a,b]"), pres.word("c")));
  EXPECT_EQ(pres.word("a^-3").length(), 3u);
}

TEST(Word, ParseErrorsCarryColumns) {
  auto pres = abc();
  try {
    pres.word("a b d");
    FAIL() << "unknown generator accepted";
  } catch (ParseError const& e) {
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(pres.word("[a,b"), ParseError);
  EXPECT_THROW(pres.word("a^"), ParseError);
}

TEST(Word, SubstituteAndRenumber) {
  Word w = Word::commutator(Word::generator(0), Word::generator(1));
  std::vector<Word> images{Word::generator(1), Word::generator(0)};
  EXPECT_EQ(w.substitute(images), Word::commutator(Word::generator(1), Word::generator(0)));
  EXPECT_EQ(w.renumber([](std::size_t g) { return g + 2; }),
            Word::commutator(Word::generator(2), Word::generator(3)));
  EXPECT_TRUE(w.erase_if([](std::size_t g) { return g == 1; }).empty());
}

TEST(Word, ToStringRoundTrips) {
  auto pres = abc();
  for (char const* text : {"a^2 b^-1 c", "[a,b]^3", "a b a^-1"}) {
    Word w = pres.word(text);
    EXPECT_EQ(pres.word(pres.to_string(w)), w) << text;
  }
}
