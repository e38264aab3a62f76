#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "pgog/analysis.hpp"
#include "pgog/error.hpp"
#include "pgog/hom.hpp"
#include "pgog/tower.hpp"

using namespace pgog;

namespace {

std::set<std::string> collapsed(GraphOfGroups const& gog, std::uint32_t p) {
  auto names = detect_collapse(fundamental_presentation(gog), p).collapsed_names();
  return {names.begin(), names.end()};
}

FinitePresentation parse(std::vector<std::string> gens, std::vector<std::string> rels) {
  FinitePresentation pres(std::move(gens));
  for (auto const& r : rels) pres.add_relator(pres.word(r));
  return pres;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Mod-p rank of P_N counted by hand: G_1 has 2+p generators and G_n has
// 2+p^n, each edge K_i identifies 1+p^i of them, and the twist puts k_n
// of G_n (n >= 2) into the Frattini subgroup.
std::size_t rank_p(std::uint32_t p, std::uint32_t N) {
  std::size_t r = 2 + p;
  for (std::uint32_t n = 2; n <= N; ++n) r += 2 + ipow(p, n) - (1 + ipow(p, n - 1)) - 1;
  return r;
}

// In the J-level the lamplighter makes all h_j congruent and adds t.
std::size_t rank_j(std::uint32_t p, std::uint32_t l) { return rank_p(p, l) - (ipow(p, l) - 1) + 1; }

}  // namespace

TEST(Collapse, HeisenbergChainExactSets) {
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint32_t N = 2; N <= 5; ++N) {
      std::set<std::string> want;
      for (std::uint32_t n = 2; n <= N; ++n) {
        want.insert("G" + std::to_string(n) + ".a" + std::to_string(n));
        want.insert("G" + std::to_string(n - 1) + ".b" + std::to_string(n - 1));
      }
      GraphOfGroups const chain = heisenberg_chain(p, N);
      EXPECT_TRUE(chain.validate().empty());
      CollapseReport r = detect_collapse(fundamental_presentation(chain), p);
      auto names = r.collapsed_names();
      EXPECT_EQ(std::set<std::string>(names.begin(), names.end()), want) << p << " " << N;
      EXPECT_EQ(r.residual_rank, 2u);
      EXPECT_EQ(r.residual.generator_count(), 2u * N - want.size());
    }
  }
}

TEST(Collapse, ThreeEdgeExample) {
  for (std::uint32_t p : {2u, 3u}) {
    EXPECT_EQ(collapsed(three_edge_example(p), p),
              (std::set<std::string>{"G1.x1", "M.x2", "M.x3", "G4.x4"}));
  }
}

TEST(Collapse, SingleEdgesOfThreeEdgeDoNotCollapse) {
  GraphOfGroups const full = three_edge_example(2);
  for (std::string edge : {"H1", "H2"}) {
    EdgeGroup const& e = full.edge(edge);
    GraphOfGroups sub;
    sub.add_vertex(full.vertices()[e.from].name, full.vertices()[e.from].model);
    sub.add_vertex(full.vertices()[e.to].name, full.vertices()[e.to].model);
    sub.add_edge(e.name, e.presentation, e.model, full.vertices()[e.from].name,
                 full.vertices()[e.to].name, e.d0, e.d1);
    EXPECT_TRUE(collapsed(sub, 2).empty()) << edge;
  }
}

TEST(Collapse, SelfReferentialBracket) {
  auto pres = parse({"g", "h"}, {"g^-1 [g,h]"});
  CollapseReport r = detect_collapse(pres, 2);
  EXPECT_EQ(r.collapsed_names(), std::vector<std::string>{"g"});
  EXPECT_EQ(r.residual.generators(), std::vector<std::string>{"h"});
}

TEST(Collapse, FiniteDepthIsNotDivergence) {
  // c = [a,b], d = [c,a]: depths 2 and 3 but nothing is forced trivial.
  auto pres = parse({"a", "b", "c", "d"}, {"c^-1 [a,b]", "[c,a]^-1 d"});
  CollapseReport r = detect_collapse(pres, 2);
  EXPECT_TRUE(r.collapsed.empty());
  ASSERT_TRUE(r.depth[2] && r.depth[3]);
  EXPECT_GE(*r.depth[2], 2u);
  EXPECT_GE(*r.depth[3], 3u);
  EXPECT_EQ(*r.depth[0], 1u);
}

TEST(Collapse, RulesFoundUpToRotationAndInversion) {
  auto pres = parse({"a", "b", "c"}, {"a^-1 b^-1 a b c^-1"});
  auto rules = extract_bracket_rules(pres);
  ASSERT_FALSE(rules.empty());
  EXPECT_TRUE(std::any_of(rules.begin(), rules.end(), [](BracketRule const& r) {
    return r.defined == 2;
  }));
}

TEST(Collapse, CommutationRelatorsIgnored) {
  auto pres = parse({"a", "b"}, {"[a,b]", "a^2", "b^2"});
  CollapseReport r = detect_collapse(pres, 2);
  EXPECT_TRUE(r.collapsed.empty());
  EXPECT_EQ(r.residual_rank, 2u);
}

TEST(EdgeBound, TowerPathsAndJLevels) {
  std::uint32_t const p = 2;
  for (std::uint32_t N = 1; N <= 3; ++N) {
    GraphOfGroups P = build_p(p, N);
    PropernessReport w = verify_properness_witness(P, witness_p_to_chain(P, p, N));
    ASSERT_TRUE(w.certified()) << N;
    BoundReport b = check_edge_bound(P, w, p);
    EXPECT_EQ(b.edge_count, N - 1);
    EXPECT_EQ(b.rank, rank_p(p, N)) << N;
    EXPECT_EQ(b.max_edge_order, N == 1 ? 1u : ipow(p, 1 + ipow(p, N - 1)));
    EXPECT_TRUE(b.passed());
  }
  for (std::uint32_t l = 1; l <= 2; ++l) {
    GraphOfGroups J = build_j(p, l);
    PropernessReport w = verify_properness_witness(J, witness_j_to_e(J, p, l));
    ASSERT_TRUE(w.certified()) << l;
    BoundReport b = check_edge_bound(J, w, p);
    EXPECT_EQ(b.edge_count, l);
    EXPECT_EQ(b.rank, rank_j(p, l)) << l;
    EXPECT_EQ(b.max_edge_order, ipow(p, ipow(p, l)));
    EXPECT_TRUE(b.passed());
  }
}

TEST(EdgeBound, ExactInequalitiesAgreeWithFloatingForm) {
  GraphOfGroups P = build_p(2, 2);
  PropernessReport w = verify_properness_witness(P, witness_p_to_chain(P, 2, 2));
  BoundReport b = check_edge_bound(P, w, 2);
  EXPECT_EQ(b.bound_holds, static_cast<double>(b.edge_count) <= b.bound + 1e-9);
  EXPECT_EQ(b.edge_sum_holds, b.edge_sum <= b.rank_side + 1e-9);
}

TEST(EdgeBound, RefusesWithoutWitness) {
  GraphOfGroups P = build_p(2, 1);
  PropernessReport w = verify_properness_witness(P, witness_p_to_f(P, 2, 1));
  ASSERT_FALSE(w.certified());
  EXPECT_THROW(check_edge_bound(P, w, 2), Error);
}

TEST(Collapse, BruteForceHomsIntoHeisenberg) {
  // Every assignment of the four chain generators into the order-8
  // Heisenberg group, filtered by all relators.
  FinitePresentation fp = fundamental_presentation(heisenberg_chain(2, 2));
  CollapseReport r = detect_collapse(fp, 2);
  ModelPtr H = make_heisenberg(2);
  std::vector<Element> elems;
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b)
      for (std::uint32_t c = 0; c < 2; ++c) elems.push_back(H->element({a, b, c}));
  ASSERT_EQ(fp.generator_count(), 4u);
  std::size_t homs = 0;
  std::vector<bool> survives(4, false);
  std::vector<Element> img(4);
  for (std::size_t code = 0; code < 8 * 8 * 8 * 8; ++code) {
    std::size_t c = code;
    for (std::size_t g = 0; g < 4; ++g, c /= 8) img[g] = elems[c % 8];
    bool ok = true;
    for (Word const& w : fp.relators()) ok = ok && evaluate(w, *H, img) == H->identity();
    if (!ok) continue;
    ++homs;
    for (std::size_t g = 0; g < 4; ++g) survives[g] = survives[g] || img[g] != H->identity();
  }
  EXPECT_GT(homs, 1u);
  for (std::size_t g = 0; g < 4; ++g) {
    EXPECT_EQ(survives[g], !r.diverges(g)) << fp.generators()[g];
  }
}
