#include "pgog/tower.hpp"

#include <algorithm>
#include <optional>

#include "pgog/closure.hpp"
#include "pgog/error.hpp"
#include "pgog/prime_level.hpp"
#include "pgog/witness_models.hpp"

namespace pgog {

namespace {

std::string h_name(std::uint64_t k) { return "h" + std::to_string(k); }
std::string k_name(std::uint32_t i) { return "k" + std::to_string(i); }
std::string g_vertex(std::uint32_t i) { return "G" + std::to_string(i); }
std::string k_edge(std::uint32_t i) { return "K" + std::to_string(i); }

std::map<std::string, std::string> same_names(ModelPtr const& m) {
  std::map<std::string, std::string> out;
  for (std::string const& g : m->generator_names()) out.emplace(g, g);
  return out;
}

/// rho_n on a generator name of G_n, as a generator name of K_{n-1}
/// ("" for the identity).
std::string rho_name(std::uint32_t p, std::uint32_t n, std::string const& g) {
  if (g == k_name(n)) return "";
  if (g == k_name(n - 1)) return g;
  if (g.size() > 1 && g[0] == 'h') {
    std::uint64_t k = std::stoull(g.substr(1));
    return h_name(k % checked_power(p, n - 1));
  }
  throw Error("rho_" + std::to_string(n) + ": unexpected generator " + g);
}

/// Decides triviality of a word of a graph-of-groups fundamental
/// presentation when the answer is local: a word inside one vertex group
/// (which embeds in the discrete fundamental group) is evaluated in that
/// vertex's model, and a word equal to a relator is trivial. Anything else
/// is left undecided.
std::optional<bool> locally_trivial(GraphOfGroups const& gog, FinitePresentation const& fp,
                                    Word const& w) {
  if (w.empty()) return true;
  for (Word const& r : fp.relators()) {
    if (r == w || r.inverse() == w) return true;
  }
  std::optional<std::size_t> vertex;
  std::vector<std::size_t> local;
  for (Letter const& l : w.letters()) {
    std::string const& name = fp.generators()[l.gen];
    auto dot = name.find('.');
    if (dot == std::string::npos) return std::nullopt;
    auto v = gog.find_vertex(name.substr(0, dot));
    if (!v || (vertex && *vertex != *v)) return std::nullopt;
    vertex = v;
  }
  VertexGroup const& vg = gog.vertices()[*vertex];
  if (!vg.model) return std::nullopt;
  Word lw = w.renumber([&](std::size_t g) {
    return vg.presentation.index_of(fp.generators()[g].substr(vg.name.size() + 1));
  });
  return evaluate(lw, *vg.model, vg.model->generators()) == vg.model->identity();
}

}  // namespace

std::uint64_t mu(std::uint32_t p, std::uint32_t n, std::uint64_t k) {
  std::uint64_t const q = checked_power(p, n);
  if (k >= q * p) throw Error("mu: index out of range");
  return k % q;
}

ModelPtr make_h(std::uint32_t p, std::uint32_t n) {
  std::uint64_t const q = checked_power(p, n);
  std::vector<std::string> basis;
  for (std::uint64_t k = 0; k < q; ++k) basis.push_back(h_name(k));
  return make_elementary_abelian(p, std::move(basis), "H(p=" + std::to_string(p) + ",n=" +
                                                         std::to_string(n) + ")");
}

ModelPtr make_k(std::uint32_t p, std::uint32_t n) {
  std::uint64_t const q = checked_power(p, n);
  std::vector<std::string> basis{k_name(n)};
  for (std::uint64_t k = 0; k < q; ++k) basis.push_back(h_name(k));
  return make_elementary_abelian(p, std::move(basis), "K(p=" + std::to_string(p) + ",n=" +
                                                         std::to_string(n) + ")");
}

ModelPtr make_g(std::uint32_t p, std::uint32_t n) {
  if (n == 0) throw Error("G_n needs n >= 1");
  if (n >= 2) return make_gn(p, n);
  return make_direct_product(make_k(p, 1), make_elementary_abelian(p, {"z"}),
                             "G(p=" + std::to_string(p) + ",n=1)");
}

TowerLevel build_level(std::uint32_t p, std::uint32_t n) {
  PrimeLevel lvl(p, n);
  TowerLevel out;
  out.p = p;
  out.n = n;
  out.H = make_h(p, n);
  out.K = make_k(p, n);
  out.G = make_g(p, n);
  out.F = make_fn(p, n);
  out.E = make_en_witness(p, n);
  out.L = make_lamplighter(p, n);
  return out;
}

GroupHom inclusion(ModelPtr const& source, ModelPtr const& target) {
  return GroupHom::by_names(source->generator_names(), target);
}

GroupHom eta(std::uint32_t p, std::uint32_t n) {
  if (n == 0) throw Error("eta_n needs n >= 1");
  ModelPtr const src = make_h(p, n);
  ModelPtr const dst = make_h(p, n - 1);
  std::map<std::string, std::string> images;
  std::uint64_t const q = checked_power(p, n);
  for (std::uint64_t k = 0; k < q; ++k) images[h_name(k)] = h_name(mu(p, n - 1, k));
  return GroupHom::from_words(src->generator_names(), dst, images);
}

GroupHom rho(std::uint32_t p, std::uint32_t n) {
  if (n < 2) throw Error("rho_n needs n >= 2");
  ModelPtr const src = make_g(p, n);
  ModelPtr const dst = make_k(p, n - 1);
  std::map<std::string, std::string> images;
  for (std::string const& g : src->generator_names()) {
    std::string r = rho_name(p, n, g);
    images[g] = r.empty() ? "1" : r;
  }
  return GroupHom::from_words(src->generator_names(), dst, images);
}

std::vector<Check> check_level(TowerLevel const& level) {
  std::vector<Check> out;
  auto check_incl = [&](std::string const& name, ModelPtr const& src, ModelPtr const& dst) {
    GroupHom hom = inclusion(src, dst);
    std::vector<std::string> bad;
    for (std::size_t r : violated_relators(*src->presentation(), hom)) {
      bad.push_back("relator " + src->presentation()->to_string(src->presentation()->relators()[r]));
    }
    if (bad.empty() && !hom_injective_on(hom, *src, src->generators())) {
      bad.push_back("not injective");
    }
    out.push_back(verdict(name, std::move(bad)));
  };
  std::string const tag = "(p=" + std::to_string(level.p) + ",n=" + std::to_string(level.n) + ")";
  check_incl("H_n -> G_n " + tag, level.H, level.G);
  check_incl("K_n -> G_n " + tag, level.K, level.G);
  if (level.n >= 2) {
    check_incl("K_{n-1} -> G_n " + tag, make_k(level.p, level.n - 1), level.G);
    GroupHom r = rho(level.p, level.n);
    std::vector<std::string> bad;
    FinitePresentation const& src = *level.G->presentation();
    for (std::size_t i : violated_relators(src, r)) {
      bad.push_back("relator " + src.to_string(src.relators()[i]));
    }
    out.push_back(verdict("rho_n is a homomorphism " + tag, std::move(bad)));
  }
  if (level.n >= 1) {
    GroupHom e = eta(level.p, level.n);
    std::vector<std::string> bad;
    FinitePresentation const& src = *level.H->presentation();
    for (std::size_t i : violated_relators(src, e)) {
      bad.push_back("relator " + src.to_string(src.relators()[i]));
    }
    // eta o incl = id on H_{n-1}
    ModelPtr const lower = e.target();
    for (std::string const& g : lower->generator_names()) {
      std::size_t idx = *level.H->find_generator(g);
      if (e.image(idx) != lower->generator(g)) bad.push_back("eta moves " + g);
    }
    out.push_back(verdict("eta_n retracts onto H_{n-1} " + tag, std::move(bad)));
  }
  return out;
}

Check check_retraction_square(std::uint32_t p, std::uint32_t n,
                              std::optional<GroupHom> const& custom_rho) {
  std::string const name =
      "retraction square (p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")";
  GroupHom const r = custom_rho ? *custom_rho : rho(p, n);
  ModelPtr const Kprev = r.target();
  std::vector<std::string> const& gsrc = r.source_generators();
  auto image_of = [&](std::string const& g) {
    auto it = std::find(gsrc.begin(), gsrc.end(), g);
    if (it == gsrc.end()) throw Error("rho does not map " + g);
    return r.image(static_cast<std::size_t>(it - gsrc.begin()));
  };
  std::vector<std::string> bad;
  std::uint64_t const q = checked_power(p, n);
  for (std::uint64_t k = 0; k < q; ++k) {
    Element viaG = image_of(h_name(k));
    Element viaH = Kprev->generator(h_name(mu(p, n - 1, k)));
    if (viaG != viaH) bad.push_back("square fails at " + h_name(k));
  }
  ModelPtr const lower = make_k(p, n - 1);
  for (std::string const& g : lower->generator_names()) {
    if (image_of(g) != Kprev->generator(g)) bad.push_back("rho o incl moves " + g);
  }
  return verdict(name, std::move(bad), std::to_string(q) + " generators of H_n checked");
}

GraphOfGroups build_q(std::uint32_t p, std::uint32_t n, std::uint32_t m) {
  GraphOfGroups gog;
  if (m == 0) {
    if (n == 0) throw Error("Q_{0,0} is not defined");
    gog.add_vertex(k_edge(n), make_k(p, n));
    return gog;
  }
  for (std::uint32_t i = n + 1; i <= n + m; ++i) gog.add_vertex(g_vertex(i), make_g(p, i));
  for (std::uint32_t i = n + 1; i < n + m; ++i) {
    ModelPtr K = make_k(p, i);
    gog.add_edge(k_edge(i), K, g_vertex(i), g_vertex(i + 1), same_names(K), same_names(K));
  }
  return gog;
}

GraphOfGroups build_p(std::uint32_t p, std::uint32_t N) {
  if (N == 0) throw Error("P_N needs N >= 1");
  return build_q(p, 0, N);
}

GraphOfGroups build_j(std::uint32_t p, std::uint32_t level) {
  GraphOfGroups gog = build_p(p, level);
  gog.add_vertex("L", make_lamplighter(p, level));
  ModelPtr H = make_h(p, level);
  gog.add_edge("H" + std::to_string(level), H, g_vertex(level), "L", same_names(H),
               same_names(H));
  return gog;
}

TowerGraphs build_graphs(std::uint32_t p, std::uint32_t n, std::uint32_t m) {
  return {build_p(p, n + m), build_q(p, n, m), build_j(p, n + m)};
}

namespace {

Specialisation by_rule(GraphOfGroups const& gog, ModelPtr target,
                       std::string (*rule)(std::string const& vertex, std::string const& gen,
                                           std::uint32_t N),
                       std::uint32_t N) {
  std::map<std::string, std::string> images;
  for (VertexGroup const& v : gog.vertices()) {
    for (std::string const& g : v.presentation.generators()) {
      std::string img = rule(v.name, g, N);
      if (!img.empty()) images[v.name + "." + g] = img;
    }
  }
  return make_specialisation(gog, std::move(target), images);
}

}  // namespace

Specialisation witness_p_to_f(GraphOfGroups const& P, std::uint32_t p, std::uint32_t N) {
  return by_rule(P, make_fn(p, N),
                 [](std::string const&, std::string const& g, std::uint32_t n) -> std::string {
                   if (g == "z") return n >= 2 ? k_name(n) : "";
                   return g;
                 },
                 N);
}

Specialisation witness_j_to_e(GraphOfGroups const& J, std::uint32_t p, std::uint32_t level) {
  return by_rule(J, make_en_witness(p, level),
                 [](std::string const& v, std::string const& g, std::uint32_t) -> std::string {
                   if (v == "L") return g;
                   if (g == "z") return "k1_1";
                   if (g[0] == 'k') return g + "_0";
                   return g;
                 },
                 level);
}

Specialisation witness_p_to_chain(GraphOfGroups const& P, std::uint32_t p, std::uint32_t N) {
  return by_rule(P, make_chain_witness(p, N, false),
                 [](std::string const&, std::string const& g, std::uint32_t) -> std::string {
                   return g;
                 },
                 N);
}

Specialisation witness_j_to_chain(GraphOfGroups const& J, std::uint32_t p, std::uint32_t level) {
  return by_rule(J, make_chain_witness(p, level, true),
                 [](std::string const& v, std::string const& g, std::uint32_t) -> std::string {
                   if (v != "L" && g[0] == 'k') return g + "_0";
                   return g;
                 },
                 level);
}

PresentationMap transition_map(std::uint32_t p, std::uint32_t n, std::uint32_t m) {
  PresentationMap out;
  out.source = fundamental_presentation(build_q(p, n, m + 1));
  out.target = fundamental_presentation(build_q(p, n, m));
  std::uint32_t const top = n + m + 1;
  std::string const fold_into = m == 0 ? k_edge(n) : g_vertex(n + m);
  for (std::string const& name : out.source.generators()) {
    auto dot = name.find('.');
    std::string const vertex = name.substr(0, dot);
    std::string const g = name.substr(dot + 1);
    if (vertex == g_vertex(top)) {
      std::string r = rho_name(p, top, g);
      out.images.push_back(r.empty() ? Word() : out.target.word(fold_into + "." + r));
    } else {
      out.images.push_back(out.target.word(name));
    }
  }
  return out;
}

std::vector<Check> check_transition_maps(std::uint32_t p, std::uint32_t n, std::uint32_t m) {
  std::string const tag =
      "(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
  std::vector<Check> out;
  if (n == 0 && m == 0) {
    Check c;
    c.name = "transition pi_{0,0} " + tag;
    c.status = Status::skip;
    c.details = "Q_{0,0} is not part of the tower";
    out.push_back(c);
    return out;
  }
  GraphOfGroups const target_gog = build_q(p, n, m);
  PresentationMap const pi = transition_map(p, n, m);

  auto judge = [&](std::string const& what, Word const& w, std::vector<std::string>& bad,
                   std::size_t& undecided) {
    auto t = locally_trivial(target_gog, pi.target, w);
    if (!t) {
      ++undecided;
    } else if (!*t) {
      bad.push_back(what);
    }
  };

  {
    std::vector<std::string> bad;
    std::size_t undecided = 0;
    for (Word const& r : pi.source.relators()) {
      judge("relator " + pi.source.to_string(r), r.substitute(pi.images), bad, undecided);
    }
    Check c = verdict("pi_{n,m} preserves relators " + tag, std::move(bad),
                      std::to_string(pi.source.relators().size()) + " relators");
    if (c.status == Status::pass && undecided) c.status = Status::unknown;
    out.push_back(c);
  }
  {
    std::vector<std::string> bad;
    std::size_t undecided = 0;
    for (std::size_t g = 0; g < pi.target.generator_count(); ++g) {
      std::string name = pi.target.generators()[g];
      std::string up = name;
      if (m == 0) up = g_vertex(n + 1) + name.substr(name.find('.'));
      Word img = pi.images[pi.source.index_of(up)];
      judge("pi o incl moves " + name, img * Word::generator(g).inverse(), bad, undecided);
    }
    Check c = verdict("pi_{n,m} o incl = id " + tag, std::move(bad));
    if (c.status == Status::pass && undecided) c.status = Status::unknown;
    out.push_back(c);
  }
  {
    // pi_{n,m} o pi_{n,m+1} against the direct fold Q_{n,m+2} -> Q_{n,m}.
    PresentationMap const upper = transition_map(p, n, m + 1);
    std::uint32_t const top = n + m + 2;
    std::string const fold_into = m == 0 ? k_edge(n) : g_vertex(n + m);
    std::uint64_t const q = checked_power(p, n + m);
    std::vector<std::string> bad;
    std::size_t undecided = 0;
    for (std::size_t g = 0; g < upper.source.generator_count(); ++g) {
      std::string const& name = upper.source.generators()[g];
      auto dot = name.find('.');
      std::string const vertex = name.substr(0, dot);
      std::string const gen = name.substr(dot + 1);
      Word composed = upper.images[g].substitute(pi.images);
      Word direct;
      if (vertex == g_vertex(top) || vertex == g_vertex(top - 1)) {
        std::string img;
        if (gen[0] == 'h') {
          img = h_name(std::stoull(gen.substr(1)) % q);
        } else if (gen == k_name(n + m)) {
          img = gen;
        }
        if (!img.empty()) direct = pi.target.word(fold_into + "." + img);
      } else {
        direct = pi.target.word(name);
      }
      judge("fold disagrees at " + name, composed * direct.inverse(), bad, undecided);
    }
    Check c = verdict("pi_{n,m} o pi_{n,m+1} = direct fold " + tag, std::move(bad),
                      std::to_string(upper.source.generator_count()) + " generators");
    if (c.status == Status::pass && undecided) c.status = Status::unknown;
    out.push_back(c);
  }
  return out;
}

Check check_two_generation(std::uint32_t p, std::uint32_t n) {
  ModelPtr const L = make_lamplighter(p, n);
  std::vector<Element> gens{L->generator("h0"), L->generator("t")};
  std::size_t const got = closure(*L, gens).order();
  std::uint64_t const want = checked_power(p, static_cast<std::uint32_t>(L->order_log()));
  std::vector<std::string> bad;
  if (got != want) {
    bad.push_back("closure of {h0, t} has order " + std::to_string(got) + ", expected " +
                  std::to_string(want));
  }
  return verdict("two-generation (p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")",
                 std::move(bad), "order " + std::to_string(got));
}

std::vector<Check> check_bracketing(std::uint32_t p, std::uint32_t n, std::uint32_t m) {
  std::string const tag =
      "(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
  std::vector<Check> out;
  GraphOfGroups const P = build_p(p, n + m);
  std::size_t const rank = mod_p_rank(fundamental_presentation(P), p);
  if (m >= 1) {
    std::vector<std::string> members;
    for (std::uint32_t i = n + 1; i <= n + m; ++i) members.push_back(g_vertex(i));
    GraphOfGroups const bracketed = bracket_subgraph(P, members, "Q");
    std::size_t const brank = mod_p_rank(fundamental_presentation(bracketed), p);
    std::vector<std::string> bad;
    if (brank != rank) {
      bad.push_back("rank " + std::to_string(brank) + " after bracketing, " +
                    std::to_string(rank) + " before");
    }
    out.push_back(verdict("bracketing P_n * Q_{n,m} = P_{n+m} " + tag, std::move(bad),
                          "mod-p rank " + std::to_string(rank)));
  }
  FinitePresentation const J = fundamental_presentation(build_j(p, n + m));
  std::vector<std::size_t> subset;
  for (std::size_t g = 0; g < J.generator_count(); ++g) {
    std::string const& name = J.generators()[g];
    if (name.rfind("G1.", 0) == 0 || name == "L.h0" || name == "L.t") subset.push_back(g);
  }
  std::vector<std::string> bad;
  if (!generates_mod_frattini(J, p, subset)) {
    bad.push_back("G_1 with L.h0 and L.t does not span the Frattini quotient");
  }
  out.push_back(verdict("J-level generated by G_1 and {h0, t} " + tag, std::move(bad),
                        "mod-p rank " + std::to_string(mod_p_rank(J, p))));
  return out;
}

}  // namespace pgog
