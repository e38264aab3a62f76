#include "pgog/analysis.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "pgog/closure.hpp"
#include "pgog/error.hpp"
#include "pgog/prime_level.hpp"

namespace pgog {

namespace {

using Letters = std::vector<std::size_t>;

Letters invert(Letters const& w) {
  Letters out(w.rbegin(), w.rend());
  for (std::size_t& x : out) x ^= 1;
  return out;
}

Letters cyclically_reduce(Letters w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == (w[hi - 1] ^ 1)) {
    ++lo;
    --hi;
  }
  return Letters(w.begin() + static_cast<std::ptrdiff_t>(lo),
                 w.begin() + static_cast<std::ptrdiff_t>(hi));
}

/// Splits c as X Y X^-1 Y^-1 and returns ([X^-1, Y^-1] sides) = (X^-1, Y^-1).
std::optional<std::pair<Word, Word>> as_commutator(Letters const& c) {
  std::size_t const n = c.size();
  if (n < 4 || n % 2) return std::nullopt;
  for (std::size_t a = 1; 2 * a < n; ++a) {
    std::size_t const b = n / 2 - a;
    Letters X(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(a));
    Letters Y(c.begin() + static_cast<std::ptrdiff_t>(a),
              c.begin() + static_cast<std::ptrdiff_t>(a + b));
    Letters Xi = invert(X), Yi = invert(Y);
    if (std::equal(Xi.begin(), Xi.end(), c.begin() + static_cast<std::ptrdiff_t>(a + b)) &&
        std::equal(Yi.begin(), Yi.end(), c.begin() + static_cast<std::ptrdiff_t>(2 * a + b))) {
      return std::pair{Word::from_expanded(Xi), Word::from_expanded(Yi)};
    }
  }
  return std::nullopt;
}

std::set<std::size_t> generators_of(Word const& w) {
  std::set<std::size_t> out;
  for (Letter const& l : w.letters()) out.insert(l.gen);
  return out;
}

}  // namespace

std::vector<std::string> CollapseReport::collapsed_names() const {
  std::vector<std::string> out;
  for (std::size_t g : collapsed) out.push_back(generators[g]);
  return out;
}

std::vector<BracketRule> extract_bracket_rules(FinitePresentation const& pres) {
  std::vector<BracketRule> rules;
  std::set<std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>> seen;
  for (std::size_t r = 0; r < pres.relators().size(); ++r) {
    Letters base = cyclically_reduce(pres.relators()[r].expand());
    for (Letters const& w : {base, invert(base)}) {
      for (std::size_t s = 0; s < w.size(); ++s) {
        if (!(w[s] & 1)) continue;  // need a leading g^-1
        Letters rest;
        for (std::size_t i = 1; i < w.size(); ++i) rest.push_back(w[(s + i) % w.size()]);
        auto split = as_commutator(rest);
        if (!split) continue;
        auto key = std::tuple{w[s] >> 1, split->first.expand(), split->second.expand()};
        if (!seen.insert(key).second) continue;
        rules.push_back({w[s] >> 1, split->first, split->second, r});
      }
    }
  }
  return rules;
}

CollapseReport detect_collapse(FinitePresentation const& pres, std::uint32_t p) {
  CollapseReport rep;
  rep.p = p;
  rep.generators = pres.generators();
  rep.rules = extract_bracket_rules(pres);
  std::size_t const n = pres.generator_count();

  std::vector<std::set<std::size_t>> lgens, rgens;
  for (BracketRule const& rule : rep.rules) {
    lgens.push_back(generators_of(rule.left));
    rgens.push_back(generators_of(rule.right));
  }

  std::vector<bool> in_d(n, false);
  for (BracketRule const& rule : rep.rules) in_d[rule.defined] = true;
  auto inside = [&](std::set<std::size_t> const& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [&](std::size_t g) { return in_d[g]; });
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t g = 0; g < n; ++g) {
      if (!in_d[g]) continue;
      bool supported = false;
      for (std::size_t i = 0; i < rep.rules.size() && !supported; ++i) {
        supported = rep.rules[i].defined == g && (inside(lgens[i]) || inside(rgens[i]));
      }
      if (!supported) {
        in_d[g] = false;
        changed = true;
      }
    }
  }

  std::vector<std::size_t> depth(n, 1);
  auto side_depth = [&](std::set<std::size_t> const& s) -> std::size_t {
    std::size_t m = 0;
    for (std::size_t g : s) {
      if (in_d[g]) continue;
      m = m == 0 ? depth[g] : std::min(m, depth[g]);
    }
    return m;
  };
  // A strictly increasing depth would need a rule cycle inside the
  // non-diverging set, which the fixpoint above excludes; the round cap is
  // only a guard.
  std::size_t const rounds = n * (rep.rules.size() + 1) + 1;
  for (std::size_t round = 0; round < rounds; ++round) {
    bool changed = false;
    for (std::size_t i = 0; i < rep.rules.size(); ++i) {
      std::size_t g = rep.rules[i].defined;
      if (in_d[g]) continue;
      std::size_t want = side_depth(lgens[i]) + side_depth(rgens[i]);
      if (want > depth[g]) {
        depth[g] = want;
        changed = true;
      }
    }
    if (!changed) break;
  }

  rep.depth.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    if (in_d[g]) {
      rep.collapsed.push_back(g);
    } else {
      rep.depth[g] = depth[g];
    }
  }

  std::vector<std::size_t> renumber(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    if (!in_d[g]) renumber[g] = rep.residual.add_generator(rep.generators[g]);
  }
  for (Word const& r : pres.relators()) {
    Word w = r.erase_if([&](std::size_t g) { return in_d[g]; });
    if (w.empty()) continue;
    rep.residual.add_relator(w.renumber([&](std::size_t g) { return renumber[g]; }));
  }
  rep.residual_rank = mod_p_rank(rep.residual, p);
  return rep;
}

BoundReport check_edge_bound(GraphOfGroups const& gog, PropernessReport const& witness,
                             std::uint32_t p) {
  if (!witness.certified()) {
    throw Error("edge bound needs a certified properness witness");
  }
  if (!is_prime(p)) throw Error("p must be prime");
  BoundReport rep;
  rep.p = p;
  rep.edge_count = gog.edges().size();
  rep.rank = mod_p_rank(fundamental_presentation(gog), p);

  std::vector<std::uint64_t> orders;
  for (EdgeGroup const& e : gog.edges()) {
    if (!e.model) throw Error("edge " + e.name + " has no model; its order is unknown");
    orders.push_back(closure_order(*e.model));
  }
  rep.max_edge_order = orders.empty() ? 1 : *std::max_element(orders.begin(), orders.end());

  double const pd = p;
  double const K = static_cast<double>(rep.max_edge_order);
  double const rk = static_cast<double>(rep.rank);
  rep.bound = pd * K / (pd - 1) * (rk - 1) + 1;
  rep.rank_side = pd / (pd - 1) * rk;
  for (std::uint64_t o : orders) rep.edge_sum += 1.0 / static_cast<double>(o);

  // Exact versions: |EX| - 1 <= pK(rk-1)/(p-1) and (p-1) sum L/|G_e| <= p rk L
  // with L the largest edge order (all orders are powers of p).
  __extension__ using Big = unsigned __int128;
  auto const E = static_cast<Big>(rep.edge_count);
  if (rep.rank == 0) {
    rep.bound_holds = rep.edge_count == 0;
  } else {
    rep.bound_holds = (E == 0) || (E - 1) * (p - 1) <=
                                      static_cast<Big>(p) * rep.max_edge_order * (rep.rank - 1);
  }
  Big const L = rep.max_edge_order;
  Big sum = 0;
  for (std::uint64_t o : orders) sum += L / o;
  rep.edge_sum_holds = static_cast<Big>(p - 1) * sum <= static_cast<Big>(p) * rep.rank * L;
  return rep;
}

namespace {

ModelPtr heisenberg_copy(std::uint32_t p, std::string const& x, std::string const& y) {
  return rename_generators(make_heisenberg(p), {x, y});
}

ModelPtr plane(std::uint32_t p, std::string const& u, std::string const& v) {
  return make_elementary_abelian(p, {u, v});
}

std::string bracket(std::string const& a, std::string const& b) {
  return "[" + a + "," + b + "]";
}

}  // namespace

GraphOfGroups heisenberg_chain(std::uint32_t p, std::uint32_t N) {
  if (N < 2) throw Error("heisenberg_chain needs N >= 2");
  GraphOfGroups gog;
  auto a = [](std::uint32_t n) { return "a" + std::to_string(n); };
  auto b = [](std::uint32_t n) { return "b" + std::to_string(n); };
  for (std::uint32_t n = 1; n <= N; ++n) {
    gog.add_vertex("G" + std::to_string(n), heisenberg_copy(p, a(n), b(n)));
  }
  for (std::uint32_t n = 2; n <= N; ++n) {
    gog.add_edge("K" + std::to_string(n), plane(p, "u", "v"), "G" + std::to_string(n - 1),
                 "G" + std::to_string(n),
                 {{"u", b(n - 1)}, {"v", bracket(a(n - 1), b(n - 1))}},
                 {{"u", bracket(a(n), b(n))}, {"v", a(n)}});
  }
  return gog;
}

GraphOfGroups three_edge_example(std::uint32_t p) {
  GraphOfGroups gog;
  gog.add_vertex("G1", heisenberg_copy(p, "x1", "y1"));
  gog.add_vertex("M", make_direct_product(heisenberg_copy(p, "x2", "y2"),
                                          heisenberg_copy(p, "x3", "y3"), "M"));
  gog.add_vertex("G4", heisenberg_copy(p, "x4", "y4"));
  gog.add_edge("H1", plane(p, "u1", "v1"), "G1", "M",
               {{"u1", "x1"}, {"v1", "[x1,y1]"}}, {{"u1", "[x2,y2]"}, {"v1", "x3"}});
  gog.add_edge("H2", plane(p, "u2", "v2"), "M", "G4",
               {{"u2", "x2"}, {"v2", "[x3,y3]"}}, {{"u2", "[x4,y4]"}, {"v2", "x4"}});
  return gog;
}

}  // namespace pgog
