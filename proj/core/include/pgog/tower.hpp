#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgog/check.hpp"
#include "pgog/graph_of_groups.hpp"
#include "pgog/hom.hpp"
#include "pgog/models.hpp"

namespace pgog {

/// k mod p^n, for 0 <= k < p^(n+1).
std::uint64_t mu(std::uint32_t p, std::uint32_t n, std::uint64_t k);

/// H_n: elementary abelian on h0..h{p^n-1}.
ModelPtr make_h(std::uint32_t p, std::uint32_t n);
/// K_n = <k{n}> x H_n.
ModelPtr make_k(std::uint32_t p, std::uint32_t n);
/// G_1 = K_1 x <z>; for n >= 2 the twisted group on k{n-1}, k{n}, h0...
ModelPtr make_g(std::uint32_t p, std::uint32_t n);

/// Models of one level of the tower.
struct TowerLevel {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  ModelPtr H, K, G, F, E, L;
};

/// Builds the models and checks the level's inclusions and retractions.
TowerLevel build_level(std::uint32_t p, std::uint32_t n);
std::vector<Check> check_level(TowerLevel const& level);

/// Sends each source generator to the target generator of the same name.
GroupHom inclusion(ModelPtr const& source, ModelPtr const& target);
/// eta_n: H_n -> H_{n-1}, h_k -> h_{mu_{n-1}(k)}; n >= 1.
GroupHom eta(std::uint32_t p, std::uint32_t n);
/// rho_n: G_n -> K_{n-1}, killing k_n and folding h_k -> h_{mu_{n-1}(k)}; n >= 2.
GroupHom rho(std::uint32_t p, std::uint32_t n);

/// The square rho_n o (H_n -> G_n) = (H_{n-1} -> K_{n-1}) o eta_n on every
/// h_k, and rho_n o (K_{n-1} -> G_n) = id. `custom_rho` replaces rho_n.
Check check_retraction_square(std::uint32_t p, std::uint32_t n,
                              std::optional<GroupHom> const& custom_rho = std::nullopt);

/// Path G{n+1} -K{n+1}- ... - G{n+m}; for m = 0 the single vertex K{n}.
GraphOfGroups build_q(std::uint32_t p, std::uint32_t n, std::uint32_t m);
/// P_N = Q_{0,N}.
GraphOfGroups build_p(std::uint32_t p, std::uint32_t N);
/// P_l plus the edge H{l} from G{l} to the lamplighter vertex L.
GraphOfGroups build_j(std::uint32_t p, std::uint32_t level);

struct TowerGraphs {
  GraphOfGroups P;  // P_{n+m}
  GraphOfGroups Q;  // Q_{n,m}
  GraphOfGroups J;  // J-level at n+m
};
TowerGraphs build_graphs(std::uint32_t p, std::uint32_t n, std::uint32_t m);

/// P_N into F_N by generator names (z -> k_N for N >= 2, else identity).
Specialisation witness_p_to_f(GraphOfGroups const& P, std::uint32_t p, std::uint32_t N);
/// J-level l into E_l: k{i} -> k{i}_0, z -> k1_1, h -> h, t -> t.
Specialisation witness_j_to_e(GraphOfGroups const& J, std::uint32_t p, std::uint32_t level);
/// P_N into the non-cyclic chain witness by names.
Specialisation witness_p_to_chain(GraphOfGroups const& P, std::uint32_t p, std::uint32_t N);
/// J-level l into the cyclic chain witness: k{i} -> k{i}_0, others by name.
Specialisation witness_j_to_chain(GraphOfGroups const& J, std::uint32_t p, std::uint32_t level);

/// A map between fundamental presentations, as generator -> word.
struct PresentationMap {
  FinitePresentation source;
  FinitePresentation target;
  std::vector<Word> images;
};

/// pi_{n,m}: Q_{n,m+1} -> Q_{n,m}.
PresentationMap transition_map(std::uint32_t p, std::uint32_t n, std::uint32_t m);

/// Checks pi_{n,m} on generators and relators, pi o incl = id, and that
/// pi_{n,m} o pi_{n,m+1} equals the direct two-level fold.
std::vector<Check> check_transition_maps(std::uint32_t p, std::uint32_t n, std::uint32_t m);

/// Closure of {h0, t} in the lamplighter level equals the whole group.
Check check_two_generation(std::uint32_t p, std::uint32_t n);

/// P_{n+m} bracketed along G{n+1}..G{n+m} has the same mod-p rank, and the
/// J-level is generated mod Frattini by G_1 together with L.h0 and L.t.
std::vector<Check> check_bracketing(std::uint32_t p, std::uint32_t n, std::uint32_t m);

}  // namespace pgog
