#include <gtest/gtest.h>

#include <algorithm>

#include "pgog/closure.hpp"
#include "pgog/error.hpp"
#include "pgog/tower.hpp"

using namespace pgog;

namespace {

bool all_pass(std::vector<Check> const& cs) {
  return std::none_of(cs.begin(), cs.end(), [](Check const& c) { return c.failed(); });
}

GroupHom shifted_rho(std::uint32_t p, std::uint32_t n) {
  ModelPtr G = make_g(p, n);
  ModelPtr K = make_k(p, n - 1);
  std::uint64_t const q = checked_power(p, n - 1);
  std::map<std::string, std::string> images;
  for (std::string const& g : G->generator_names()) {
    if (g[0] == 'h') {
      std::uint64_t k = std::stoull(g.substr(1));
      images[g] = "h" + std::to_string((mu(p, n - 1, k) + 1) % q);
    } else if (g == "k" + std::to_string(n - 1)) {
      images[g] = g;
    } else {
      images[g] = "1";
    }
  }
  return GroupHom::from_words(G->generator_names(), K, images);
}

}  // namespace

TEST(Tower, Mu) {
  EXPECT_EQ(mu(2, 2, 5), 1u);
  EXPECT_EQ(mu(3, 1, 7), 1u);
  EXPECT_EQ(mu(2, 0, 1), 0u);
}

TEST(Tower, LevelModels) {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    TowerLevel lv = build_level(2, n);
    EXPECT_EQ(lv.H->generator_names().size(), checked_power(2, n));
    EXPECT_EQ(lv.K->generator_names().size(), checked_power(2, n) + 1);
    EXPECT_TRUE(all_pass(check_level(lv))) << n;
  }
}

TEST(Tower, EtaFoldsIndices) {
  GroupHom e = eta(2, 2);
  ModelPtr const& H1 = e.target();
  EXPECT_EQ(H1->generator_names().size(), 2u);
  EXPECT_EQ(e.image(3), H1->generator("h1"));
  EXPECT_EQ(e.image(2), H1->generator("h0"));
  EXPECT_THROW(eta(2, 0), Error);
}

TEST(Tower, RetractionSquareCommutes) {
  for (std::uint32_t n = 2; n <= 3; ++n) EXPECT_FALSE(check_retraction_square(2, n).failed()) << n;
  EXPECT_FALSE(check_retraction_square(3, 2).failed());
}

TEST(Tower, MutatedRhoReportedAtH0) {
  Check c = check_retraction_square(2, 2, shifted_rho(2, 2));
  ASSERT_TRUE(c.failed());
  ASSERT_FALSE(c.violations.empty());
  EXPECT_NE(c.violations.front().find("h0"), std::string::npos) << c.violations.front();
}

TEST(Tower, QGraphs) {
  GraphOfGroups q = build_q(2, 1, 0);
  ASSERT_EQ(q.vertices().size(), 1u);
  EXPECT_EQ(q.vertices()[0].name, "K1");
  GraphOfGroups q2 = build_q(2, 1, 2);
  EXPECT_EQ(q2.vertices().size(), 2u);
  EXPECT_TRUE(q2.is_path());
  EXPECT_THROW(build_q(2, 0, 0), Error);
  GraphOfGroups J = build_j(2, 2);
  EXPECT_TRUE(J.find_vertex("L"));
  EXPECT_TRUE(J.find_edge("H2"));
  EXPECT_TRUE(J.validate().empty());
}

TEST(Tower, TransitionMaps) {
  for (std::uint32_t n = 0; n <= 3; ++n) {
    for (std::uint32_t m = 0; m <= 2; ++m) {
      auto cs = check_transition_maps(2, n, m);
      EXPECT_TRUE(all_pass(cs)) << n << " " << m;
      if (n + m > 0) {
        EXPECT_TRUE(std::all_of(cs.begin(), cs.end(), [](Check const& c) {
          return c.status == Status::pass;
        })) << n << " " << m;
      }
    }
  }
}

TEST(Tower, TransitionMapIsRetraction) {
  PresentationMap pi = transition_map(2, 1, 1);
  EXPECT_EQ(pi.images.size(), pi.source.generator_count());
  // Generators of the smaller graph map to themselves.
  for (std::string const& g : pi.target.generators()) {
    auto i = pi.source.find(g);
    ASSERT_TRUE(i) << g;
    EXPECT_EQ(pi.images[*i], pi.target.word(g)) << g;
  }
}

TEST(Tower, TwoGeneration) {
  for (std::uint32_t n = 1; n <= 3; ++n) EXPECT_EQ(check_two_generation(2, n).status, Status::pass);
  EXPECT_EQ(check_two_generation(3, 1).status, Status::pass);
}

TEST(Tower, SingleGeneratorIsCyclic) {
  ModelPtr L = make_lamplighter(2, 3);
  std::vector<Element> t{L->generator("t")};
  EXPECT_EQ(closure(*L, t).order(), 8u);
}

TEST(Tower, Bracketing) {
  for (std::uint32_t n = 0; n <= 2; ++n) {
    for (std::uint32_t m = 0; m <= 2; ++m) {
      if (n + m == 0) continue;
      EXPECT_TRUE(all_pass(check_bracketing(2, n, m))) << n << " " << m;
    }
  }
}

TEST(Tower, Witnesses) {
  GraphOfGroups J1 = build_j(2, 1), J2 = build_j(2, 2);
  EXPECT_TRUE(verify_properness_witness(J1, witness_j_to_e(J1, 2, 1)).certified());
  EXPECT_TRUE(verify_properness_witness(J2, witness_j_to_e(J2, 2, 2)).certified());
  GraphOfGroups J3 = build_j(2, 3);
  EXPECT_TRUE(verify_properness_witness(J3, witness_j_to_chain(J3, 2, 3)).certified());
}
