// Acceptance suite: one line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pgog/amalgam.hpp"
#include "pgog/analysis.hpp"
#include "pgog/closure.hpp"
#include "pgog/coset_enumeration.hpp"
#include "pgog/dsl.hpp"
#include "pgog/hom.hpp"
#include "pgog/registry.hpp"
#include "pgog/separation.hpp"
#include "pgog/tower.hpp"
#include "pgog/witness_models.hpp"

using namespace pgog;

namespace {

// Tolerances. Every quantity below is compared exactly; only wall time
// has a budget.
constexpr double kCertificationBudgetSeconds = 10.0;
constexpr double kPropernessBudgetSeconds = 60.0;
constexpr int kNormalFormTrials = 1000;
constexpr std::uint32_t kSeparationMaxLevel = 4;
constexpr std::size_t kSeparationSuiteSize = 10;
// Collapse soundness enumerates every hom into each repo model up to this order.
constexpr std::size_t kSoundnessTargetOrder = 32;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, std::string const& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void note(std::string const& what) { notes.push_back(what); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::string str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> const kLevels = {{2, 1}, {2, 2}, {3, 1}};

Outcome criterion_1() {
  Outcome out;
  auto const t0 = Clock::now();
  for (auto [p, n] : kLevels) {
    for (ModelPtr m : {make_gn(p, n), make_fn(p, n), make_heisenberg(p), make_lamplighter(p, n)}) {
      FinitePresentation const& pres = *m->presentation();
      ModelCheck mc = check_model_satisfies(pres, m, GroupHom::by_names(pres.generators(), m));
      out.require(mc.passed(), m->name() + " does not satisfy its presentation");
    }
  }
  auto enumerate_against_closure = [&](ModelPtr const& m, std::size_t want) {
    CosetTable t = coset_enumerate(*m->presentation());
    std::size_t const order = closure_order(*m);
    out.require(t.complete(), m->name() + " enumeration incomplete");
    out.require(t.index() == want && order == want,
                m->name() + ": " + std::to_string(t.index()) + " cosets, closure " +
                    std::to_string(order) + ", expected " + std::to_string(want));
  };
  enumerate_against_closure(make_gn(2, 1), 16);
  enumerate_against_closure(make_heisenberg(2), 8);
  double const s = seconds_since(t0);
  out.require(s < kCertificationBudgetSeconds, "took " + str(s) + " s");
  out.note(std::to_string(4 * kLevels.size()) + " models, 2 enumerations");
  return out;
}

Outcome criterion_2() {
  Outcome out;
  for (auto [p, n] : kLevels) {
    std::uint64_t const q = ipow(p, n);
    auto expect = [&](ModelPtr const& m, std::uint64_t want) {
      std::uint64_t got = closure_order(*m);
      out.require(got == want, m->name() + ": " + std::to_string(got) + " != " + std::to_string(want));
    };
    expect(make_gn(p, n), ipow(p, 2 + q));
    expect(make_fn(p, n), ipow(p, n + q));
    expect(make_lamplighter(p, n), ipow(p, q + n));
  }
  return out;
}

Outcome criterion_3() {
  Outcome out;
  std::size_t checks = 0;
  for (std::uint32_t n = 2; n <= 3; ++n) {
    Check c = check_retraction_square(2, n);
    ++checks;
    out.require(c.status == Status::pass, c.name + ": " + c.details);
  }
  for (std::uint32_t n = 0; n <= 3; ++n) {
    for (std::uint32_t m = 0; m <= 2; ++m) {
      for (Check const& c : check_transition_maps(2, n, m)) {
        ++checks;
        if (n + m == 0 && c.status == Status::skip) continue;
        out.require(c.status == Status::pass, c.name + ": " + std::string(to_string(c.status)));
      }
    }
  }
  out.note(std::to_string(checks) + " checks");
  return out;
}

Outcome criterion_4() {
  Outcome out;
  auto const t0 = Clock::now();
  auto record = [&](std::string const& label, PropernessReport const& r) {
    std::string why;
    if (r.target_defect) why = "target not a group";
    if (!r.non_injective.empty()) why = "not injective on " + r.non_injective.front();
    if (!r.specialisation.valid()) why = r.specialisation.violations.front();
    out.require(r.certified(), label + " not certified (" + why + ")");
  };
  std::vector<std::string> chain_ok;
  for (std::uint32_t N = 1; N <= 3; ++N) {
    GraphOfGroups P = build_p(2, N);
    record("P_" + std::to_string(N) + " -> F_" + std::to_string(N),
           verify_properness_witness(P, witness_p_to_f(P, 2, N)));
    if (verify_properness_witness(P, witness_p_to_chain(P, 2, N)).certified()) {
      chain_ok.push_back("P_" + std::to_string(N));
    }
  }
  for (std::uint32_t l = 1; l <= 2; ++l) {
    GraphOfGroups J = build_j(2, l);
    record("J_" + std::to_string(l) + " -> E_" + std::to_string(l),
           verify_properness_witness(J, witness_j_to_e(J, 2, l)));
  }
  double const s = seconds_since(t0);
  out.require(s < kPropernessBudgetSeconds, "took " + str(s) + " s");
  std::string chain = "chain witness certifies";
  for (auto const& c : chain_ok) chain += " " + c;
  out.note(chain);
  return out;
}

std::vector<std::pair<std::string, GraphOfGroups>> improper_graphs() {
  std::vector<std::pair<std::string, GraphOfGroups>> out;
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint32_t N = 2; N <= 5; ++N) {
      out.emplace_back("chain p=" + std::to_string(p) + " N=" + std::to_string(N),
                       heisenberg_chain(p, N));
    }
    out.emplace_back("three-edge p=" + std::to_string(p), three_edge_example(p));
  }
  return out;
}

std::uint32_t prime_of(GraphOfGroups const& g) { return g.vertices().front().model->prime(); }

Outcome criterion_5() {
  Outcome out;
  for (auto const& [label, g] : improper_graphs()) {
    std::uint32_t const p = prime_of(g);
    CollapseReport r = detect_collapse(fundamental_presentation(g), p);
    auto names = r.collapsed_names();
    std::set<std::string> got(names.begin(), names.end()), want;
    if (label.starts_with("chain")) {
      std::uint32_t const N = static_cast<std::uint32_t>(g.vertices().size());
      for (std::uint32_t n = 2; n <= N; ++n) {
        want.insert("G" + std::to_string(n) + ".a" + std::to_string(n));
        want.insert("G" + std::to_string(n - 1) + ".b" + std::to_string(n - 1));
      }
      out.require(r.residual_rank == 2, label + ": residual rank " + std::to_string(r.residual_rank));
    } else {
      want = {"G1.x1", "M.x2", "M.x3", "G4.x4"};
    }
    out.require(got == want, label + ": diverging set differs");
  }
  return out;
}

Outcome criterion_6() {
  Outcome out;
  std::size_t graphs = 0;
  auto run = [&](std::string const& label, GraphOfGroups const& g, Specialisation const& spec,
                 std::uint32_t p) {
    PropernessReport w = verify_properness_witness(g, spec);
    out.require(w.certified(), label + ": witness not certified");
    if (!w.certified()) return;
    BoundReport b = check_edge_bound(g, w, p);
    ++graphs;
    out.require(b.bound_holds, label + ": edge count above bound");
    out.require(b.edge_sum_holds, label + ": edge sum above rank side");
  };
  for (std::uint32_t N = 1; N <= 3; ++N) {
    GraphOfGroups P = build_p(2, N);
    run("P_" + std::to_string(N), P, witness_p_to_chain(P, 2, N), 2);
  }
  for (std::uint32_t l = 1; l <= 2; ++l) {
    GraphOfGroups J = build_j(2, l);
    run("J_" + std::to_string(l), J, witness_j_to_e(J, 2, l), 2);
  }
  GraphOfGroups J3 = build_j(2, 3);
  run("J_3", J3, witness_j_to_chain(J3, 2, 3), 2);
  for (auto const& entry : std::filesystem::directory_iterator(PGOG_EXAMPLES_DIR)) {
    if (entry.path().extension() != ".gog") continue;
    DslDocument doc = parse_dsl_file(entry.path().string());
    if (!doc.graph) continue;
    for (WitnessDecl const& w : doc.witnesses) {
      run(entry.path().filename().string() + ":" + w.name, *doc.graph,
          make_specialisation(*doc.graph, w.target, w.images), doc.prime ? doc.prime : 2);
    }
  }
  out.note(std::to_string(graphs) + " witnessed graphs");
  return out;
}

Outcome criterion_7() {
  Outcome out;
  for (auto [p, n] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 1u}}) {
    ModelPtr L = make_lamplighter(p, n);
    std::vector<Element> gens{L->generator("h0"), L->generator("t")};
    std::size_t got = closure(*L, gens).order();
    out.require(got == closure_order(*L) && got == ipow(p, ipow(p, n) + n),
                L->name() + ": closure " + std::to_string(got));
  }
  return out;
}

Outcome criterion_8() {
  Outcome out;
  GraphOfGroups P = build_p(2, 2);
  FinitePresentation fp = fundamental_presentation(P);
  PathAmalgam am(P);
  Specialisation spec = witness_p_to_f(P, 2, 2);
  std::mt19937_64 rng(20240601);
  auto word = [&](std::size_t max_len) {
    Word w;
    std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
      w = w * Word::generator(rng() % fp.generator_count(), rng() % 2 ? 1 : -1);
    }
    return w;
  };
  int assoc = 0, inverse = 0, insertion = 0, image = 0, empty_nf = 0, in_vertex = 0;
  for (int i = 0; i < kNormalFormTrials; ++i) {
    ReducedWord a = am.normal_form(word(8), fp), b = am.normal_form(word(8), fp),
                c = am.normal_form(word(8), fp);
    if (am.multiply(am.multiply(a, b), c) != am.multiply(a, am.multiply(b, c))) ++assoc;
    if (!am.multiply(a, am.inverse(a)).empty() || !am.multiply(am.inverse(a), a).empty()) ++inverse;
    Word u = word(10), v = word(10), g = word(4);
    Word r = fp.relators()[rng() % fp.relators().size()];
    ReducedWord const base = am.normal_form(u * v, fp);
    if (am.normal_form(u * g * g.inverse() * v, fp) != base ||
        am.normal_form(u * r * v, fp) != base) {
      ++insertion;
    }
    // Both checkable directions: an empty normal form has trivial image,
    // and since the witness is injective on vertex groups, a nonempty form
    // inside one vertex group has nontrivial image. Conjugated relators
    // give samples that are trivial by construction.
    ReducedWord const conj = am.normal_form(u * r * u.inverse(), fp);
    if (!conj.empty()) ++insertion;
    ReducedWord const single = am.normal_form(word(1) * g * g.inverse(), fp);
    for (ReducedWord const* x : {&base, &conj, &single}) {
      bool const trivial_image = am.evaluate(*x, spec) == spec.target->identity();
      if (x->empty()) ++empty_nf;
      if (x->empty() && !trivial_image) ++image;
      if (!x->empty() && x->steps.empty() && trivial_image) ++image;
      if (!x->empty() && x->steps.empty()) ++in_vertex;
    }
  }
  out.require(assoc == 0, std::to_string(assoc) + " associativity failures");
  out.require(inverse == 0, std::to_string(inverse) + " inverse failures");
  out.require(insertion == 0, std::to_string(insertion) + " insertion failures");
  out.require(image == 0, std::to_string(image) + " witness disagreements");
  out.note(std::to_string(kNormalFormTrials) + " trials each, " + std::to_string(empty_nf) +
           " trivial and " + std::to_string(in_vertex) + " single-vertex samples");
  return out;
}

Outcome criterion_9() {
  Outcome out;
  auto const& suite = separation_suite();
  out.require(suite.size() == kSeparationSuiteSize, "suite size " + std::to_string(suite.size()));
  std::size_t verified = 0;
  for (std::string const& w : suite) {
    SeparationCertificate c = separate(w, 2, 1, kSeparationMaxLevel);
    out.require(c.outcome == SeparationCertificate::Outcome::separated,
                w + ": " + std::string(to_string(c.outcome)));
    if (c.outcome != SeparationCertificate::Outcome::separated) continue;
    auto problem = verify_certificate(c);
    out.require(!problem, w + ": " + problem.value_or(""));
    if (!problem) ++verified;
  }
  out.note(std::to_string(verified) + " certificates re-verified");
  return out;
}

// Enumerates all homs from `pres` into `target` by backtracking over the
// target's multiplication table. A generator occurring once in a relator
// whose other letters are assigned is solved for directly; otherwise the
// generator touching the most nearly complete relators is branched on.
class HomSearch {
 public:
  HomSearch(FinitePresentation const& pres, FiniteGroupModel const& target)
      : pres_(pres), images_(pres.generator_count()), assigned_(pres.generator_count(), false),
        touching_(pres.generator_count()) {
    ClosureTable const table = closure(target, target.generators());
    elements_ = table.elements();
    std::size_t const n = elements_.size();
    mul_.resize(n * n);
    inv_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      inv_[a] = table.index_of(target.inverse(elements_[a]));
      for (std::size_t b = 0; b < n; ++b) {
        mul_[a * n + b] = table.index_of(target.multiply(elements_[a], elements_[b]));
      }
    }
    for (std::size_t r = 0; r < pres.relators().size(); ++r) {
      std::set<std::size_t> gens;
      for (Letter const& l : pres.relators()[r].letters()) gens.insert(l.gen);
      open_.push_back(gens.size());
      for (std::size_t g : gens) touching_[g].push_back(r);
    }
  }

  /// Calls visit(images) for every hom; images are target elements.
  template <class Visit>
  std::size_t run(Visit&& visit) {
    count_ = 0;
    search(visit, 0);
    return count_;
  }

 private:
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * elements_.size() + b]; }

  std::size_t power(std::size_t a, std::int64_t e) const {
    if (e < 0) {
      a = inv_[a];
      e = -e;
    }
    std::size_t acc = 0;
    while (e--) acc = mul(acc, a);
    return acc;
  }

  std::size_t product(std::vector<Letter> const& ls, std::size_t from, std::size_t to) const {
    std::size_t acc = 0;
    for (std::size_t i = from; i < to; ++i) acc = mul(acc, power(images_[ls[i].gen], ls[i].exp));
    return acc;
  }

  template <class Visit>
  void search(Visit& visit, std::size_t depth) {
    if (depth == images_.size()) {
      ++count_;
      std::vector<Element> out;
      for (std::size_t i : images_) out.push_back(elements_[i]);
      visit(out);
      return;
    }
    auto [g, forced] = choose();
    if (forced) {
      try_value(visit, depth, g, *forced);
      return;
    }
    for (std::size_t e = 0; e < elements_.size(); ++e) try_value(visit, depth, g, e);
  }

  template <class Visit>
  void try_value(Visit& visit, std::size_t depth, std::size_t g, std::size_t e) {
    images_[g] = e;
    assigned_[g] = true;
    bool ok = true;
    for (std::size_t r : touching_[g]) {
      auto const& ls = pres_.relators()[r].letters();
      if (--open_[r] == 0 && ok && product(ls, 0, ls.size()) != 0) ok = false;
    }
    if (ok) search(visit, depth + 1);
    for (std::size_t r : touching_[g]) ++open_[r];
    assigned_[g] = false;
  }

  std::pair<std::size_t, std::optional<std::size_t>> choose() const {
    for (std::size_t r = 0; r < open_.size(); ++r) {
      if (open_[r] != 1) continue;
      auto const& ls = pres_.relators()[r].letters();
      std::size_t at = ls.size(), hits = 0;
      for (std::size_t i = 0; i < ls.size(); ++i) {
        if (!assigned_[ls[i].gen]) {
          at = i;
          ++hits;
        }
      }
      if (hits != 1 || (ls[at].exp != 1 && ls[at].exp != -1)) continue;
      // before * g^e * after = 1
      std::size_t v = mul(inv_[product(ls, 0, at)], inv_[product(ls, at + 1, ls.size())]);
      if (ls[at].exp == -1) v = inv_[v];
      return {ls[at].gen, v};
    }
    std::size_t best = images_.size(), best_score = 0;
    for (std::size_t g = 0; g < images_.size(); ++g) {
      if (assigned_[g]) continue;
      std::size_t score = 0;
      for (std::size_t r : touching_[g]) score += open_[r] == 1 ? 4 : open_[r] == 2 ? 1 : 0;
      if (best == images_.size() || score > best_score) {
        best = g;
        best_score = score;
      }
    }
    return {best, std::nullopt};
  }

  FinitePresentation const& pres_;
  std::vector<Element> elements_;  // index 0 is the identity
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inv_;
  std::vector<std::size_t> images_;
  std::vector<bool> assigned_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<std::size_t> open_;
  std::size_t count_ = 0;
};

Outcome criterion_10() {
  Outcome out;
  std::size_t homs = 0, targets = 0;
  for (auto const& [label, g] : improper_graphs()) {
    std::uint32_t const p = prime_of(g);
    FinitePresentation fp = fundamental_presentation(g);
    CollapseReport r = detect_collapse(fp, p);
    std::vector<ModelPtr> witness_models;
    for (ModelPtr const& m :
         {make_heisenberg(p), make_gn(p, 1), make_fn(p, 1), make_lamplighter(p, 1),
          make_en_witness(p, 1), make_chain_witness(p, 1, false), make_chain_witness(p, 1, true)}) {
      if (closure_order(*m) <= kSoundnessTargetOrder) witness_models.push_back(m);
    }
    for (ModelPtr const& t : witness_models) {
      ++targets;
      auto const t1 = Clock::now();
      std::size_t bad = 0;
      homs += HomSearch(fp, *t).run([&](std::vector<Element> const& images) {
        for (std::size_t gen : r.collapsed) {
          if (images[gen] != t->identity()) ++bad;
        }
      });
      if (std::getenv("PGOG_ACCEPTANCE_TRACE")) std::fprintf(stderr, "%s into %s: %.2f s\n", label.c_str(), t->name().c_str(), seconds_since(t1));
      out.require(bad == 0, label + " into " + t->name() + ": " + std::to_string(bad) +
                                " nontrivial images of diverging generators");
    }
  }
  out.note(std::to_string(homs) + " homs into " + std::to_string(targets) + " targets");
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    char const* name;
    Outcome (*run)();
  };
  Criterion const criteria[] = {
      {1, "model-presentation certification", criterion_1},
      {2, "order formulas", criterion_2},
      {3, "tower coherence", criterion_3},
      {4, "properness witnesses", criterion_4},
      {5, "improperness", criterion_5},
      {6, "edge bound on witnessed graphs", criterion_6},
      {7, "two-generation", criterion_7},
      {8, "normal-form properties", criterion_8},
      {9, "separation", criterion_9},
      {10, "collapse soundness", criterion_10},
  };
  int failed = 0;
  for (Criterion const& c : criteria) {
    Outcome o;
    auto const t0 = Clock::now();
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << " (" << str(seconds_since(t0))
         << " s)";
    for (std::string const& n : o.notes) line << "; " << n;
    std::puts(line.str().c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed ? 1 : 0;
}
