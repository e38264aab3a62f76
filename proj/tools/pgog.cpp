#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pgog/amalgam.hpp"
#include "pgog/analysis.hpp"
#include "pgog/closure.hpp"
#include "pgog/coset_enumeration.hpp"
#include "pgog/dsl.hpp"
#include "pgog/error.hpp"
#include "pgog/hom.hpp"
#include "pgog/registry.hpp"
#include "pgog/report.hpp"
#include "pgog/separation.hpp"
#include "pgog/tower.hpp"

using namespace pgog;

namespace {

struct Source {
  std::string file;
  std::string model;
  std::string presentation;
};

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("file", src.file, "DSL file (.gog)");
  cmd->add_option("--model", src.model, "model spec, e.g. 'Gn(p=2,n=2)'");
  cmd->add_option("--presentation", src.presentation, "presentation name in the file");
}

std::uint32_t prime_of(std::optional<std::uint32_t> flag, DslDocument const* doc) {
  if (flag) return *flag;
  if (doc && doc->prime) return doc->prime;
  return 2;
}

/// The presentation a command works on: a model's, a named one, the
/// fundamental presentation of the file's graph, or its first presentation.
FinitePresentation resolve(Source const& src, std::optional<DslDocument> const& doc,
                           std::uint32_t p, ModelPtr* model_out = nullptr) {
  if (!src.model.empty()) {
    ModelPtr m = make_model(src.model, p);
    if (model_out) *model_out = m;
    if (!m->presentation()) throw Error("model " + m->name() + " has no presentation");
    return *m->presentation();
  }
  if (!doc) throw Error("give a file or --model");
  if (!src.presentation.empty()) {
    auto const* pres = doc->presentation(src.presentation);
    if (!pres) throw Error("no presentation '" + src.presentation + "'");
    return *pres;
  }
  if (doc->graph) return fundamental_presentation(*doc->graph);
  if (!doc->presentations.empty()) return doc->presentations.front().second;
  throw Error("file defines no presentation or graph");
}

std::optional<DslDocument> load(Source const& src) {
  if (src.file.empty()) return std::nullopt;
  return parse_dsl_file(src.file);
}

WitnessDecl const& find_witness(DslDocument const& doc, std::string const& name) {
  for (WitnessDecl const& w : doc.witnesses) {
    if (name.empty() || w.name == name) return w;
  }
  throw Error(name.empty() ? "file declares no witness" : "no witness '" + name + "'");
}

Check info(std::string name, std::string details) {
  Check c;
  c.name = std::move(name);
  c.details = std::move(details);
  return c;
}

std::string join(std::vector<std::string> const& xs) {
  std::string out;
  for (std::string const& x : xs) out += (out.empty() ? "" : " ") + x;
  return out;
}

Check properness_check(GraphOfGroups const& gog, WitnessDecl const& w, PropernessReport& out) {
  Specialisation spec = make_specialisation(gog, w.target, w.images);
  out = verify_properness_witness(gog, spec);
  std::vector<std::string> bad = out.specialisation.violations;
  if (out.target_defect) bad.push_back("target: " + *out.target_defect);
  for (std::string const& v : out.non_injective) bad.push_back("not injective on " + v);
  for (std::string const& v : out.unchecked) bad.push_back("no model for " + v);
  return verdict("witness " + w.name + " certifies properness", std::move(bad),
                 "target " + w.target->name());
}

void emit(Report const& r, bool json) {
  std::cout << (json ? to_json(r) + "\n" : to_text(r));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphs of finite p-groups: presentations, properness and the inaccessible tower"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "emit the report as JSON");

  std::optional<std::uint32_t> p, n, m, max_level;
  auto prime_opt = [&](CLI::App* c) {
    c->add_option("--p", p, "prime")->check(CLI::Range(2u, 1000u));
  };

  Report report;

  Source collapse_src;
  auto* collapse = app.add_subcommand("collapse", "find generators forced trivial in pro-p images");
  add_source(collapse, collapse_src);
  prime_opt(collapse);

  Source bound_src;
  std::string bound_witness;
  auto* bound = app.add_subcommand("bound", "check the edge-count bound for a witnessed graph");
  add_source(bound, bound_src);
  bound->add_option("--witness", bound_witness, "witness name (default: the first)");
  prime_opt(bound);

  Source verify_src;
  auto* verify = app.add_subcommand("verify", "validate a graph, its witnesses, or a model");
  add_source(verify, verify_src);
  prime_opt(verify);

  Source enum_src;
  std::string subgroup;
  std::optional<std::size_t> max_cosets;
  auto* enumerate = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
  add_source(enumerate, enum_src);
  enumerate->add_option("--subgroup", subgroup, "subgroup generators separated by ';'");
  enumerate->add_option("--max-cosets", max_cosets, "coset cap (default: the size guard)");
  prime_opt(enumerate);

  Source rank_src;
  auto* rank = app.add_subcommand("rank", "mod-p rank of the abelianisation");
  add_source(rank, rank_src);
  prime_opt(rank);

  Source nf_src;
  std::string nf_word, nf_witness;
  auto* nf = app.add_subcommand("normal-form", "reduced word in the fundamental group of a path");
  add_source(nf, nf_src);
  nf->add_option("--word", nf_word, "word over V.g, or a name from a 'word' line (default: all)");
  nf->add_option("--witness", nf_witness, "also evaluate under this witness");

  auto* tower = app.add_subcommand("tower", "the tower of graphs of groups");
  tower->require_subcommand(1);
  auto* tower_build = tower->add_subcommand("build", "build P, Q and J at one level");
  prime_opt(tower_build);
  tower_build->add_option("--n", n, "level n (default 1)");
  tower_build->add_option("--m", m, "length m (default 1)");
  auto* tower_verify = tower->add_subcommand("verify-all", "all tower checks up to a level");
  prime_opt(tower_verify);
  tower_verify->add_option("--max-level", max_level, "highest level n");
  tower_verify->add_option("--m", m, "highest m");

  std::string sep_word;
  auto* sep = app.add_subcommand("separate", "find a finite quotient where a J-word survives");
  sep->add_option("--word", sep_word, "word such as 'G1.k1 L.t'")->required();
  prime_opt(sep);
  sep->add_option("--max-level", max_level, "highest level tried (default 4)");

  std::string example_id;
  auto* example = app.add_subcommand("example", "run one registered example");
  example->add_option("id", example_id, "example id")->required();
  prime_opt(example);
  example->add_option("--n", n, "size parameter");
  example->add_option("--m", m, "length parameter");
  example->add_option("--max-level", max_level, "highest level");

  std::string filter = "*";
  auto* examples = app.add_subcommand("examples", "run registered examples matching a glob");
  examples->add_option("--examples", filter, "glob over example ids")->default_val("*");
  examples->add_flag("--list", "list ids instead of running");
  prime_opt(examples);
  examples->add_option("--n", n, "size parameter");
  examples->add_option("--m", m, "length parameter");
  examples->add_option("--max-level", max_level, "highest level");

  auto* models = app.add_subcommand("models", "list model names accepted by --model and the DSL");

  CLI11_PARSE(app, argc, argv);

  try {
    ExampleParams params;
    params.p = p.value_or(2);
    params.n = n;
    params.m = m;
    params.max_level = max_level;

    if (collapse->parsed()) {
      auto doc = load(collapse_src);
      std::uint32_t const q = prime_of(p, doc ? &*doc : nullptr);
      CollapseReport r = detect_collapse(resolve(collapse_src, doc, q), q);
      report.command = "collapse";
      report.parameters = {{"p", std::to_string(q)}};
      report.add(info("collapse",
                      std::to_string(r.collapsed.size()) + " diverging: " +
                          join(r.collapsed_names()) + "; residual rank " +
                          std::to_string(r.residual_rank)));
      report.result = result_json(r);
    } else if (bound->parsed()) {
      auto doc = load(bound_src);
      if (!doc || !doc->graph) throw Error("bound needs a file with a graph");
      std::uint32_t const q = prime_of(p, &*doc);
      report.command = "bound";
      report.parameters = {{"p", std::to_string(q)}};
      WitnessDecl const& w = find_witness(*doc, bound_witness);
      PropernessReport pr;
      report.add(properness_check(*doc->graph, w, pr));
      if (pr.certified()) {
        BoundReport b = check_edge_bound(*doc->graph, pr, q);
        std::vector<std::string> bad;
        if (!b.bound_holds) bad.push_back("edge count above bound");
        if (!b.edge_sum_holds) bad.push_back("edge sum above rank side");
        report.add(verdict("edge bound", std::move(bad),
                           "|E|=" + std::to_string(b.edge_count) + " K=" +
                               std::to_string(b.max_edge_order) + " rk=" +
                               std::to_string(b.rank)));
        report.result = result_json(b);
      }
    } else if (verify->parsed()) {
      auto doc = load(verify_src);
      std::uint32_t const q = prime_of(p, doc ? &*doc : nullptr);
      report.command = "verify";
      report.parameters = {{"p", std::to_string(q)}};
      if (!verify_src.model.empty()) {
        ModelPtr model;
        FinitePresentation pres = resolve(verify_src, std::nullopt, q, &model);
        if (doc && !verify_src.presentation.empty()) pres = resolve({"", "", verify_src.presentation}, doc, q);
        ModelCheck mc = check_model_satisfies(pres, model, GroupHom::by_names(pres.generators(), model));
        std::vector<std::string> bad;
        for (std::string const& r : mc.violated_relators) bad.push_back("relator " + r + " fails");
        if (!mc.generates()) {
          bad.push_back("generators reach " + std::to_string(mc.image_order) + " of " +
                        std::to_string(mc.model_order));
        }
        report.add(verdict("model " + model->name() + " satisfies presentation", std::move(bad),
                           "order " + std::to_string(mc.model_order)));
      }
      if (doc && doc->graph) {
        GraphOfGroups const& g = *doc->graph;
        report.add(verdict("connected", g.connected() ? std::vector<std::string>{}
                                                      : std::vector<std::string>{"disconnected"}));
        report.add(verdict("edge maps are monomorphisms", g.validate()));
        Check red = info("reduced", check_reduced(g) ? "no edge map is onto" : "some edge map is onto");
        red.status = check_reduced(g) ? Status::pass : Status::fail;
        report.add(red);
        std::string witnesses;
        for (WitnessDecl const& w : doc->witnesses) {
          PropernessReport pr;
          report.add(properness_check(g, w, pr));
          witnesses += (witnesses.empty() ? "\"" : ",\"") + w.name + "\":" + result_json(pr);
        }
        if (!witnesses.empty()) report.result = "{\"witnesses\":{" + witnesses + "}}";
      }
    } else if (enumerate->parsed()) {
      auto doc = load(enum_src);
      std::uint32_t const q = prime_of(p, doc ? &*doc : nullptr);
      ModelPtr model;
      FinitePresentation pres = resolve(enum_src, doc, q, &model);
      std::vector<Word> sub;
      std::stringstream ss(subgroup);
      for (std::string part; std::getline(ss, part, ';');) {
        if (part.find_first_not_of(' ') != std::string::npos) sub.push_back(pres.word(part));
      }
      CosetTable t = coset_enumerate(pres, sub, max_cosets.value_or(size_guard()));
      report.command = "enumerate";
      report.parameters = {{"p", std::to_string(q)}};
      Check c = info("coset enumeration", std::to_string(t.index()) + " cosets");
      c.status = t.complete() ? Status::pass : Status::unknown;
      if (!t.complete()) c.details = "did not complete within " + std::to_string(t.index()) + " cosets";
      report.add(c);
      if (model && t.complete() && sub.empty()) {
        std::size_t const order = closure_order(*model);
        std::vector<std::string> bad;
        if (order != t.index()) bad.push_back("closure order " + std::to_string(order));
        report.add(verdict("index equals model order", std::move(bad), std::to_string(order)));
      }
    } else if (rank->parsed()) {
      auto doc = load(rank_src);
      std::uint32_t const q = prime_of(p, doc ? &*doc : nullptr);
      FinitePresentation pres = resolve(rank_src, doc, q);
      report.command = "rank";
      report.parameters = {{"p", std::to_string(q)}};
      report.add(info("mod-p rank", std::to_string(mod_p_rank(pres, q))));
    } else if (nf->parsed()) {
      auto doc = load(nf_src);
      if (!doc || !doc->graph) throw Error("normal-form needs a file with a graph");
      PathAmalgam am(*doc->graph);
      FinitePresentation const fp = fundamental_presentation(*doc->graph);
      std::vector<std::pair<std::string, std::string>> words;
      for (auto const& [name, body] : doc->words) {
        if (nf_word.empty() || nf_word == name) words.emplace_back(name, body);
      }
      if (words.empty() && !nf_word.empty()) words.emplace_back(nf_word, nf_word);
      if (words.empty()) throw Error("give --word or declare words in the file");
      report.command = "normal-form";
      if (!nf_word.empty()) report.parameters = {{"word", nf_word}};
      for (auto const& [label, body] : words) {
        ReducedWord w = am.normal_form(fp.word(body), fp);
        std::string const prefix = label == body ? "" : label + ": ";
        report.add(info(prefix + "normal form", am.to_string(w)));
        if (!nf_witness.empty()) {
          WitnessDecl const& wd = find_witness(*doc, nf_witness);
          Element img = am.evaluate(w, make_specialisation(*doc->graph, wd.target, wd.images));
          report.add(info(prefix + "image in " + wd.target->name(), to_string(img)));
        }
      }
    } else if (tower_build->parsed()) {
      std::uint32_t const q = p.value_or(2), nn = n.value_or(1), mm = m.value_or(1);
      TowerGraphs gs = build_graphs(q, nn, mm);
      report.command = "tower build";
      report.parameters = {{"p", std::to_string(q)}, {"n", std::to_string(nn)}, {"m", std::to_string(mm)}};
      for (auto const& [label, g] : {std::pair<std::string, GraphOfGroups const*>{"P", &gs.P},
                                     {"Q", &gs.Q}, {"J", &gs.J}}) {
        FinitePresentation fp = fundamental_presentation(*g);
        report.add(verdict(label + " edge maps are monomorphisms", g->validate(),
                           std::to_string(g->vertices().size()) + " vertices, " +
                               std::to_string(g->edges().size()) + " edges, rank " +
                               std::to_string(mod_p_rank(fp, q))));
      }
      report.add_all(check_level(build_level(q, nn + mm)));
    } else if (tower_verify->parsed()) {
      ExampleParams tp = params;
      tp.n = max_level;
      report = run_all("tower/*", tp);
      report.command = "tower verify-all";
      std::uint32_t const top = max_level.value_or(params.p == 2 ? 3 : 1);
      for (std::uint32_t k = 1; k <= top; ++k) report.add(check_two_generation(params.p, k));
    } else if (sep->parsed()) {
      std::uint32_t const q = p.value_or(2);
      SeparationCertificate c = separate(sep_word, q, 1, max_level.value_or(4));
      report.command = "separate";
      report.parameters = {{"word", sep_word}, {"p", std::to_string(q)},
                           {"max-level", std::to_string(max_level.value_or(4))}};
      Check ch = info("separation", std::string(to_string(c.outcome)));
      if (c.outcome == SeparationCertificate::Outcome::separated) {
        auto problem = verify_certificate(c);
        ch.status = problem ? Status::fail : Status::pass;
        ch.details = "level " + std::to_string(c.level) + " in " + c.witness;
        if (problem) ch.violations.push_back(*problem);
      } else {
        ch.status = c.outcome == SeparationCertificate::Outcome::trivial ? Status::fail
                                                                         : Status::unknown;
      }
      report.add(ch);
      report.result = result_json(c);
    } else if (example->parsed()) {
      report = run_example(example_id, params);
    } else if (examples->parsed()) {
      if (examples->count("--list")) {
        for (ExampleEntry const& e : example_registry()) {
          if (glob_match(filter, e.id)) std::cout << e.id << "  " << e.anchor << '\n';
        }
        return 0;
      }
      report = run_all(filter, params);
    } else if (models->parsed()) {
      if (!json) {
        for (auto const& [name, params_list] : model_catalogue()) {
          std::cout << name << '(' << params_list << ")\n";
        }
        return 0;
      }
      report.command = "models";
      std::string list;
      for (auto const& [name, params_list] : model_catalogue()) {
        list += (list.empty() ? "{\"" : ",{\"") + std::string("name\":\"") + name +
                "\",\"parameters\":\"" + params_list + "\"}";
      }
      report.result = "{\"models\":[" + list + "]}";
    }
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  emit(report, json);
  return report.exit_code();
}
