#include "pgog/registry.hpp"

#include <algorithm>
#include <future>

#include "pgog/analysis.hpp"
#include "pgog/error.hpp"
#include "pgog/graph_of_groups.hpp"
#include "pgog/separation.hpp"
#include "pgog/tower.hpp"

namespace pgog {

namespace {

std::string tag(std::string const& key, std::uint32_t v) { return key + "=" + std::to_string(v); }

Check collapse_check(std::string name, GraphOfGroups const& gog, std::uint32_t p,
                     std::vector<std::string> want, std::optional<std::size_t> want_rank) {
  CollapseReport const r = detect_collapse(fundamental_presentation(gog), p);
  std::vector<std::string> got = r.collapsed_names();
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  std::vector<std::string> bad;
  for (std::string const& g : want) {
    if (!std::binary_search(got.begin(), got.end(), g)) bad.push_back(g + " not flagged");
  }
  for (std::string const& g : got) {
    if (!std::binary_search(want.begin(), want.end(), g)) bad.push_back(g + " flagged");
  }
  if (want_rank && r.residual_rank != *want_rank) {
    bad.push_back("residual rank " + std::to_string(r.residual_rank) + ", expected " +
                  std::to_string(*want_rank));
  }
  std::string details = std::to_string(got.size()) + " diverging, residual rank " +
                        std::to_string(r.residual_rank);
  return verdict(std::move(name), std::move(bad), std::move(details));
}

Check properness_check(std::string name, GraphOfGroups const& gog, Specialisation const& spec) {
  PropernessReport const r = verify_properness_witness(gog, spec);
  std::vector<std::string> bad = r.specialisation.violations;
  if (r.target_defect) bad.push_back("target: " + *r.target_defect);
  for (std::string const& v : r.non_injective) bad.push_back("not injective on " + v);
  for (std::string const& v : r.unchecked) bad.push_back("no model for " + v);
  return verdict(std::move(name), std::move(bad), "target " + spec.target->name());
}

Check bound_check(std::string name, GraphOfGroups const& gog, Specialisation const& spec,
                  std::uint32_t p) {
  PropernessReport const w = verify_properness_witness(gog, spec);
  if (!w.certified()) {
    Check c;
    c.name = std::move(name);
    c.status = Status::unknown;
    c.details = "no certified witness";
    return c;
  }
  BoundReport const b = check_edge_bound(gog, w, p);
  std::vector<std::string> bad;
  if (!b.bound_holds) bad.push_back("edge count above bound");
  if (!b.edge_sum_holds) bad.push_back("edge sum above rank side");
  return verdict(std::move(name), std::move(bad),
                 "|E|=" + std::to_string(b.edge_count) + " K=" + std::to_string(b.max_edge_order) +
                     " rk=" + std::to_string(b.rank));
}

std::vector<Check> three_edge(ExampleParams const& ps) {
  GraphOfGroups const gog = three_edge_example(ps.p);
  std::vector<Check> out;
  out.push_back(verdict("three-edge monomorphisms " + tag("p", ps.p), gog.validate()));
  out.push_back(collapse_check("three-edge collapse " + tag("p", ps.p), gog, ps.p,
                               {"G1.x1", "M.x2", "M.x3", "G4.x4"}, std::nullopt));
  return out;
}

std::vector<Check> single_edges(ExampleParams const& ps) {
  GraphOfGroups const gog = three_edge_example(ps.p);
  std::vector<Check> out;
  for (auto const& [members, edge] :
       {std::pair{std::vector<std::string>{"G1", "M"}, std::string("H1")},
        std::pair{std::vector<std::string>{"M", "G4"}, std::string("H2")}}) {
    GraphOfGroups sub;
    for (std::string const& v : members) sub.add_vertex(v, gog.vertex(v).model);
    EdgeGroup const& e = gog.edge(edge);
    sub.add_edge(e.name, e.presentation, e.model, gog.vertices()[e.from].name,
                 gog.vertices()[e.to].name, e.d0, e.d1);
    out.push_back(collapse_check("single edge " + edge + " has no forced collapse", sub, ps.p,
                                 {}, std::nullopt));
    Check skip;
    skip.name = "single edge " + edge + " properness";
    skip.status = Status::skip;
    skip.details = "needs an amalgam properness criterion this library does not implement";
    out.push_back(std::move(skip));
  }
  return out;
}

std::vector<Check> improper_chain(ExampleParams const& ps) {
  std::uint32_t const N = ps.n.value_or(4);
  std::vector<std::string> want;
  for (std::uint32_t k = 2; k <= N; ++k) {
    want.push_back("G" + std::to_string(k) + ".a" + std::to_string(k));
    want.push_back("G" + std::to_string(k - 1) + ".b" + std::to_string(k - 1));
  }
  GraphOfGroups const gog = heisenberg_chain(ps.p, N);
  std::vector<Check> out;
  out.push_back(verdict("chain monomorphisms " + tag("N", N), gog.validate()));
  out.push_back(collapse_check("chain collapse " + tag("p", ps.p) + " " + tag("N", N), gog,
                               ps.p, want, 2));
  return out;
}

std::vector<Check> pn_witness(ExampleParams const& ps) {
  std::uint32_t const N = ps.n.value_or(2);
  GraphOfGroups const P = build_p(ps.p, N);
  std::string const t = tag("p", ps.p) + " " + tag("N", N);
  std::vector<Check> out;
  out.push_back(properness_check("P_N into F_N " + t, P, witness_p_to_f(P, ps.p, N)));
  out.push_back(properness_check("P_N into chain witness " + t, P, witness_p_to_chain(P, ps.p, N)));
  return out;
}

std::vector<Check> j_witness(ExampleParams const& ps) {
  std::uint32_t const l = ps.n.value_or(2);
  GraphOfGroups const J = build_j(ps.p, l);
  std::string const t = tag("p", ps.p) + " " + tag("level", l);
  std::vector<Check> out;
  if (l <= 2) {
    out.push_back(properness_check("J-level into E_l " + t, J, witness_j_to_e(J, ps.p, l)));
  }
  out.push_back(properness_check("J-level into chain witness " + t, J,
                                 witness_j_to_chain(J, ps.p, l)));
  return out;
}

std::vector<Check> two_generation(ExampleParams const& ps) {
  std::uint32_t const top = ps.n.value_or(ps.p == 2 ? 3 : 1);
  std::vector<Check> out;
  for (std::uint32_t n = 1; n <= top; ++n) out.push_back(check_two_generation(ps.p, n));
  return out;
}

std::vector<Check> edge_bound(ExampleParams const& ps) {
  std::uint32_t const top = ps.n.value_or(ps.p == 2 ? 3 : 2);
  std::vector<Check> out;
  for (std::uint32_t N = 1; N <= top; ++N) {
    GraphOfGroups const P = build_p(ps.p, N);
    out.push_back(bound_check("edge bound on P_N " + tag("p", ps.p) + " " + tag("N", N), P,
                              witness_p_to_chain(P, ps.p, N), ps.p));
  }
  for (std::uint32_t l = 1; l + 1 <= top; ++l) {
    GraphOfGroups const J = build_j(ps.p, l);
    out.push_back(bound_check("edge bound on J-level " + tag("p", ps.p) + " " + tag("level", l),
                              J, witness_j_to_chain(J, ps.p, l), ps.p));
  }
  return out;
}

std::vector<Check> separation(ExampleParams const& ps) {
  std::uint32_t const max_level = ps.max_level.value_or(4);
  std::vector<Check> out;
  for (std::string const& w : separation_suite()) {
    SeparationCertificate const c = separate(w, ps.p, 1, max_level);
    Check ch;
    ch.name = "separate " + w;
    if (c.outcome == SeparationCertificate::Outcome::separated) {
      auto const problem = verify_certificate(c);
      ch.status = problem ? Status::fail : Status::pass;
      ch.details = "level " + std::to_string(c.level) + " in " + c.witness;
      if (problem) ch.violations.push_back(*problem);
    } else {
      ch.status = c.outcome == SeparationCertificate::Outcome::trivial ? Status::fail
                                                                       : Status::unknown;
      ch.details = std::string(to_string(c.outcome));
    }
    out.push_back(std::move(ch));
  }
  return out;
}

std::uint32_t default_levels(ExampleParams const& ps) { return ps.n.value_or(ps.p == 2 ? 3 : 1); }
std::uint32_t default_m(ExampleParams const& ps) { return ps.m.value_or(ps.p == 2 ? 2 : 1); }

std::vector<Check> tower_retraction(ExampleParams const& ps) {
  std::vector<Check> out;
  std::uint32_t const top = default_levels(ps);
  for (std::uint32_t n = 1; n <= top; ++n) {
    std::vector<Check> lv = check_level(build_level(ps.p, n));
    out.insert(out.end(), lv.begin(), lv.end());
    if (n >= 2) out.push_back(check_retraction_square(ps.p, n));
  }
  return out;
}

std::vector<Check> tower_transitions(ExampleParams const& ps) {
  std::vector<Check> out;
  for (std::uint32_t n = 0; n <= default_levels(ps); ++n) {
    for (std::uint32_t m = 0; m <= default_m(ps); ++m) {
      std::vector<Check> cs = check_transition_maps(ps.p, n, m);
      out.insert(out.end(), cs.begin(), cs.end());
    }
  }
  return out;
}

std::vector<Check> tower_bracketing(ExampleParams const& ps) {
  std::vector<Check> out;
  for (std::uint32_t n = 0; n <= default_levels(ps); ++n) {
    for (std::uint32_t m = 0; m <= default_m(ps); ++m) {
      if (n + m == 0) continue;
      std::vector<Check> cs = check_bracketing(ps.p, n, m);
      out.insert(out.end(), cs.begin(), cs.end());
    }
  }
  return out;
}

}  // namespace

std::vector<ExampleEntry> const& example_registry() {
  static std::vector<ExampleEntry> const entries = {
      {"paper/three-edge", "three-edge example G1 - G2 x G3 - G4",
       "x1..x4 diverge in every pro-p image", three_edge},
      {"paper/three-edge-single-edge", "either single amalgamation of the three-edge example",
       "no forced collapse; properness itself skipped", single_edges},
      {"paper/improper-chain", "arbitrarily long improper chain of Heisenberg groups",
       "a2..aN and b1..b(N-1) diverge, residual rank 2", improper_chain},
      {"paper/Pn-witness", "properness of P_N via F_N",
       "verify_properness_witness certifies", pn_witness},
      {"paper/J-witness", "properness of the J-levels via E_l",
       "verify_properness_witness certifies", j_witness},
      {"paper/two-generation", "lamplighter level generated by h0 and t",
       "closure of {h0, t} is the whole level", two_generation},
      {"paper/edge-bound", "edge-count bound for proper splittings",
       "both inequalities hold on every witnessed graph", edge_bound},
      {"paper/separation", "residual p-finiteness of the J-levels",
       "every suite word separates and re-verifies", separation},
      {"tower/retraction", "inclusions and retractions eta, rho of the tower",
       "all squares commute", tower_retraction},
      {"tower/transitions", "transition maps pi_{n,m} between the Q_{n,m}",
       "maps are homs, retract the inclusions, and compose to direct folds", tower_transitions},
      {"tower/bracketing", "bracketing a proper subgraph",
       "rank preserved; J-level generated by G1, h0, t", tower_bracketing},
  };
  return entries;
}

std::vector<std::string> const& separation_suite() {
  static std::vector<std::string> const words = {
      "G1.k1 L.t",
      "L.h0",
      "G2.k2 L.t G2.k2 L.t^-1",
      "[G1.k1, L.t]",
      "G3.k3 L.t^2 G1.z L.t^-2",
      "[G2.k1, G2.h2] L.t",
      "(G1.h1 L.t)^4",
      "L.t^4 G1.k1 L.t^-4",
      "G3.k2 L.h9 L.t G2.h3",
      "[L.h0, L.t]",
  };
  return words;
}

bool glob_match(std::string_view pattern, std::string_view text) {
  std::size_t p = 0, t = 0, star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

namespace {

void add_params(Report& r, ExampleParams const& ps) {
  r.parameters.emplace_back("p", std::to_string(ps.p));
  if (ps.n) r.parameters.emplace_back("n", std::to_string(*ps.n));
  if (ps.m) r.parameters.emplace_back("m", std::to_string(*ps.m));
  if (ps.max_level) r.parameters.emplace_back("max-level", std::to_string(*ps.max_level));
}

std::vector<Check> run_entry(ExampleEntry const& e, ExampleParams const& ps) {
  std::vector<Check> cs;
  try {
    cs = e.run(ps);
  } catch (Error const& err) {
    Check c;
    c.name = "run";
    c.status = Status::fail;
    c.details = err.what();
    cs.push_back(std::move(c));
  }
  for (Check& c : cs) c.name = e.id + ": " + c.name;
  return cs;
}

}  // namespace

Report run_example(std::string_view id, ExampleParams const& params) {
  auto const& reg = example_registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](auto const& e) { return e.id == id; });
  if (it == reg.end()) throw Error("unregistered example '" + std::string(id) + "'");
  Report r;
  r.command = "example";
  r.parameters.emplace_back("id", std::string(id));
  add_params(r, params);
  r.add_all(run_entry(*it, params));
  return r;
}

Report run_all(std::string_view filter, ExampleParams const& params) {
  Report r;
  r.command = "examples";
  r.parameters.emplace_back("filter", std::string(filter));
  add_params(r, params);
  std::vector<std::future<std::vector<Check>>> jobs;
  for (ExampleEntry const& e : example_registry()) {
    if (!glob_match(filter, e.id)) continue;
    jobs.push_back(std::async(std::launch::async, [&e, params] { return run_entry(e, params); }));
  }
  for (auto& j : jobs) r.add_all(j.get());
  return r;
}

}  // namespace pgog
