#include <gtest/gtest.h>

#include "pgog/analysis.hpp"
#include "pgog/dsl.hpp"
#include "pgog/error.hpp"
#include "pgog/closure.hpp"

using namespace pgog;

namespace {

std::string const examples_dir = PGOG_EXAMPLES_DIR;

ParseError parse_failure(std::string const& text) {
  try {
    parse_dsl(text);
  } catch (ParseError const& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return ParseError("none", 0, 0);
}

}  // namespace

TEST(Dsl, SimplePresentation) {
  DslDocument doc = parse_dsl("gens a\nrel a^2\n");
  ASSERT_EQ(doc.presentations.size(), 1u);
  FinitePresentation const& p = doc.presentations[0].second;
  EXPECT_EQ(p.generators(), std::vector<std::string>{"a"});
  ASSERT_EQ(p.relators().size(), 1u);
  EXPECT_EQ(p.relators()[0], Word::generator(0, 2));
}

TEST(Dsl, CommutatorSugar) {
  DslDocument doc = parse_dsl("gens a b c\nrel [a,b]=c\n");
  FinitePresentation const& p = doc.presentations[0].second;
  EXPECT_EQ(p.relators()[0], p.word("c^-1 a^-1 b^-1 a b"));
}

TEST(Dsl, CommentsContinuationsAndNamedPresentations) {
  DslDocument doc = parse_dsl(
      "# header\n"
      "presentation D8   # dihedral\n"
      "gens r s\n"
      "rel r^4\n"
      "rel s^2 \\\n"
      "    \n"
      "rel (r s)^2\n"
      "presentation Z2\n"
      "gens a\n"
      "rel a^2\n");
  ASSERT_NE(doc.presentation("D8"), nullptr);
  EXPECT_EQ(doc.presentation("D8")->relators().size(), 3u);
  EXPECT_EQ(doc.presentation("Z2")->generator_count(), 1u);
  EXPECT_EQ(doc.presentation("main"), nullptr);
}

TEST(Dsl, HeisenbergChainFileMatchesBuilder) {
  DslDocument doc = parse_dsl_file(examples_dir + "/heisenberg_chain.gog");
  ASSERT_TRUE(doc.graph);
  EXPECT_EQ(doc.prime, 2u);
  FinitePresentation from_file = fundamental_presentation(*doc.graph);
  FinitePresentation built = fundamental_presentation(heisenberg_chain(2, 3));
  EXPECT_EQ(from_file.generators(), built.generators());
  EXPECT_EQ(from_file.relators(), built.relators());
  EXPECT_TRUE(doc.graph->validate().empty());
}

TEST(Dsl, ShippedFilesParse) {
  for (char const* f : {"heisenberg_chain.gog", "three_edge.gog", "p2_witness.gog",
                        "heisenberg.gog"}) {
    EXPECT_NO_THROW(parse_dsl_file(examples_dir + "/" + f)) << f;
  }
  DslDocument doc = parse_dsl_file(examples_dir + "/p2_witness.gog");
  ASSERT_EQ(doc.witnesses.size(), 1u);
  EXPECT_EQ(doc.witnesses[0].images.at("G1.z"), "k2");
}

TEST(Dsl, EdgeSyntaxFromDocs) {
  DslDocument doc = parse_dsl(
      "prime 2\n"
      "vertex v1 : G(1)\n"
      "vertex v2 : Gn(p=2,n=2)\n"
      "edge e : K(1) from v1 to v2 with d0: k1->k1,h0->h0,h1->h1 d1: k1->k1,h0->h0,h1->h1\n");
  ASSERT_TRUE(doc.graph);
  EXPECT_EQ(doc.graph->edges().size(), 1u);
  EXPECT_TRUE(doc.graph->validate().empty());
}

TEST(Dsl, Models) {
  EXPECT_EQ(closure_order(*make_model("Gn(p=2,n=1)")), 16u);
  EXPECT_EQ(closure_order(*make_model("Gn(2, 1)")), 16u);
  EXPECT_EQ(closure_order(*make_model("Heisenberg()", 3)), 27u);
  EXPECT_EQ(closure_order(*make_model("Product(Heisenberg(2), Abelian(2, 1))")), 16u);
  EXPECT_EQ(closure_order(*make_model("Lamplighter(n=1, p=3)")), 81u);
  EXPECT_THROW(make_model("Gn(2)"), ParseError);
  EXPECT_THROW(make_model("Gn(2,1,3)"), ParseError);
  EXPECT_THROW(make_model("Gn(q=2,n=1)"), ParseError);
  EXPECT_THROW(make_model("Nope(2)"), ParseError);
  EXPECT_THROW(make_model("Gn(4,1)"), ParseError);
}

TEST(Dsl, ErrorPositions) {
  ParseError e = parse_failure("gens a\nrel a^2 b\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 9u);

  e = parse_failure("prime 2\nvertex V : Heisenbreg()\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 12u);

  e = parse_failure("gens a\nfrobnicate\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 1u);

  e = parse_failure("vertex V : Gn(p=2)\n");
  EXPECT_EQ(e.line(), 1u);

  e = parse_failure("gens a b\n\nrel [a,b\n");
  EXPECT_EQ(e.line(), 3u);
}

TEST(Dsl, EdgeErrors) {
  std::string const head = "prime 2\nvertex A : Heisenberg() gens x y\nvertex B : Heisenberg() gens x y\n";
  EXPECT_THROW(parse_dsl(head + "edge E : Abelian(rank=1) gens u from A to C with d0: u->x d1: u->x\n"),
               ParseError);
  EXPECT_THROW(parse_dsl(head + "edge E : Abelian(rank=1) gens u from A to B with d0: u->q d1: u->x\n"),
               ParseError);
  EXPECT_THROW(parse_dsl(head + "edge E : Abelian(rank=1) gens u from A to B d1: u->x\n"),
               ParseError);
  EXPECT_NO_THROW(parse_dsl(head + "edge E : Abelian(rank=1) gens u from A to B d0: u->x d1: u->y\n"));
}

TEST(Dsl, WordsAndWitnesses) {
  DslDocument doc = parse_dsl(
      "prime 2\n"
      "vertex A : Heisenberg() gens x y\n"
      "witness W : Heisenberg() map A.x->x, A.y->[x,y] y\n"
      "word w = [A.x, A.y]^2\n");
  ASSERT_EQ(doc.witnesses.size(), 1u);
  EXPECT_EQ(doc.witnesses[0].images.at("A.y"), "[x,y] y");
  ASSERT_EQ(doc.words.size(), 1u);
  EXPECT_EQ(doc.words[0].second, "[A.x, A.y]^2");
}
