#include <gtest/gtest.h>

#include <algorithm>

#include "pgog/error.hpp"
#include "pgog/graph_of_groups.hpp"
#include "pgog/tower.hpp"

using namespace pgog;

namespace {

std::map<std::string, std::string> identity_on(ModelPtr const& m) {
  std::map<std::string, std::string> out;
  for (auto const& g : m->generator_names()) out[g] = g;
  return out;
}

// P_2 at p = 2 with the d1 images of h0 and h1 exchanged.
GraphOfGroups swapped_p2() {
  GraphOfGroups gog;
  gog.add_vertex("G1", make_g(2, 1));
  gog.add_vertex("G2", make_g(2, 2));
  ModelPtr K = make_k(2, 1);
  auto d1 = identity_on(K);
  std::swap(d1["h0"], d1["h1"]);
  gog.add_edge("K1", K, "G1", "G2", identity_on(K), d1);
  return gog;
}

}  // namespace

TEST(GraphOfGroups, FundamentalPresentationShape) {
  GraphOfGroups P = build_p(2, 2);
  FinitePresentation fp = fundamental_presentation(P);
  // G1: k1 h0 h1 z; G2: k1 k2 h0..h3; no stable letters on a tree.
  EXPECT_EQ(fp.generator_count(), 4u + 6u);
  EXPECT_TRUE(fp.find("G1.z"));
  EXPECT_TRUE(fp.find("G2.h3"));
  std::size_t vertex_rels = 0;
  for (auto const& v : P.vertices()) vertex_rels += v.presentation.relators().size();
  EXPECT_EQ(fp.relators().size(), vertex_rels + 3u);
}

TEST(GraphOfGroups, LoopGetsStableLetter) {
  GraphOfGroups gog;
  ModelPtr A = make_elementary_abelian(2, {"a", "b"});
  gog.add_vertex("V", A);
  gog.add_edge("E", make_elementary_abelian(2, {"u"}), "V", "V", {{"u", "a"}}, {{"u", "b"}});
  SpanningTree tree = spanning_tree(gog);
  EXPECT_FALSE(tree.contains(0));
  FinitePresentation fp = fundamental_presentation(gog, tree);
  ASSERT_TRUE(fp.find("t_E"));
  Word const r = fp.relators().back();
  Word const want = fp.word("(t_E V.b t_E^-1)^-1 V.a");
  EXPECT_TRUE(r == want || r == want.inverse()) << fp.to_string(r);
  EXPECT_TRUE(gog.connected());
  EXPECT_FALSE(gog.is_path());
}

TEST(GraphOfGroups, ValidateCatchesBadEdgeMaps) {
  GraphOfGroups gog;
  ModelPtr H = rename_generators(make_heisenberg(2), {"x", "y"});
  gog.add_vertex("A", H);
  gog.add_vertex("B", H);
  ModelPtr plane = make_elementary_abelian(2, {"u", "v"});
  gog.add_edge("E", plane, "A", "B", {{"u", "x"}, {"v", "x"}}, {{"u", "x"}, {"v", "y"}});
  EXPECT_FALSE(gog.validate().empty());
  EXPECT_THROW(gog.add_edge("F", plane, "A", "B", {{"u", "x"}}, {{"u", "x"}, {"v", "y"}}), Error);
  EXPECT_THROW(gog.add_edge("E", plane, "A", "B", {{"u", "x"}, {"v", "y"}},
                            {{"u", "x"}, {"v", "y"}}),
               Error);
}

TEST(GraphOfGroups, Reducedness) {
  EXPECT_TRUE(check_reduced(build_p(2, 3)));
  GraphOfGroups gog;
  ModelPtr A = make_elementary_abelian(2, {"a"});
  gog.add_vertex("V", A);
  gog.add_vertex("W", make_elementary_abelian(2, {"a", "b"}));
  gog.add_edge("E", A, "V", "W", {{"a", "a"}}, {{"a", "a"}});
  EXPECT_FALSE(check_reduced(gog));
}

TEST(Specialisation, P2IntoF2) {
  GraphOfGroups P = build_p(2, 2);
  Specialisation spec = witness_p_to_f(P, 2, 2);
  EXPECT_TRUE(verify_specialisation(P, spec).valid());
  PropernessReport r = verify_properness_witness(P, spec);
  EXPECT_TRUE(r.certified());
}

TEST(Specialisation, SwappedEdgeImagesAreReported) {
  GraphOfGroups P = swapped_p2();
  EXPECT_TRUE(P.validate().empty());
  SpecialisationReport r = verify_specialisation(P, witness_p_to_f(P, 2, 2));
  ASSERT_FALSE(r.valid());
  bool names_edge = std::any_of(r.violations.begin(), r.violations.end(), [](auto const& v) {
    return v.find("K1") != std::string::npos;
  });
  EXPECT_TRUE(names_edge);
}

TEST(Specialisation, HomOnFundamentalPresentationKillsRelators) {
  GraphOfGroups P = build_p(2, 2);
  FinitePresentation fp = fundamental_presentation(P);
  GroupHom h = specialisation_hom(P, witness_p_to_f(P, 2, 2), fp);
  EXPECT_TRUE(violated_relators(fp, h).empty());
}

TEST(Properness, P1IntoF1IsNotInjective) {
  // |G_1| = p^(2+p) exceeds |F_1| = p^(1+p).
  GraphOfGroups P = build_p(2, 1);
  PropernessReport r = verify_properness_witness(P, witness_p_to_f(P, 2, 1));
  EXPECT_FALSE(r.certified());
  EXPECT_EQ(r.non_injective, std::vector<std::string>{"G1"});
}

TEST(Properness, F3TargetIsRejected) {
  GraphOfGroups P = build_p(2, 3);
  PropernessReport r = verify_properness_witness(P, witness_p_to_f(P, 2, 3));
  EXPECT_TRUE(r.target_defect.has_value());
  EXPECT_FALSE(r.certified());
}

TEST(Properness, ChainWitnessCertifiesPaths) {
  for (std::uint32_t N = 1; N <= 3; ++N) {
    GraphOfGroups P = build_p(2, N);
    EXPECT_TRUE(verify_properness_witness(P, witness_p_to_chain(P, 2, N)).certified()) << N;
  }
}

TEST(Bracketing, SubgraphKeepsRank) {
  GraphOfGroups P = build_p(2, 3);
  GraphOfGroups B = bracket_subgraph(P, {"G2", "G3"}, "Y");
  EXPECT_EQ(B.vertices().size(), 2u);
  EXPECT_EQ(B.edges().size(), 1u);
  EXPECT_EQ(B.vertex("Y").model, nullptr);
  EXPECT_EQ(mod_p_rank(fundamental_presentation(B), 2),
            mod_p_rank(fundamental_presentation(P), 2));
}
