#include "pgog/graph_of_groups.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pgog/closure.hpp"
#include "pgog/error.hpp"

namespace pgog {

namespace {

FinitePresentation require_presentation(ModelPtr const& model, std::string const& what) {
  if (!model) throw Error(what + ": missing model");
  if (!model->presentation()) throw Error(what + ": model " + model->name() + " has no presentation");
  return *model->presentation();
}

std::vector<Word> parse_images(FinitePresentation const& edge, FinitePresentation const& vertex,
                               std::map<std::string, std::string> const& images,
                               std::string const& what) {
  std::vector<Word> out;
  for (std::string const& g : edge.generators()) {
    auto it = images.find(g);
    if (it == images.end()) throw Error(what + ": no image for edge generator " + g);
    out.push_back(vertex.word(it->second));
  }
  for (auto const& [g, w] : images) {
    if (!edge.find(g)) throw Error(what + ": unknown edge generator " + g);
  }
  return out;
}

std::vector<std::size_t> incident_sorted(GraphOfGroups const& gog, std::size_t v) {
  std::vector<std::size_t> out;
  auto const& es = gog.edges();
  for (std::size_t e = 0; e < es.size(); ++e) {
    if (es[e].from == v || es[e].to == v) out.push_back(e);
  }
  std::sort(out.begin(), out.end(),
            [&](std::size_t a, std::size_t b) { return es[a].name < es[b].name; });
  return out;
}

}  // namespace

std::size_t GraphOfGroups::add_vertex(std::string name, ModelPtr model) {
  FinitePresentation pres = require_presentation(model, "vertex " + name);
  return add_vertex(std::move(name), std::move(pres), std::move(model));
}

std::size_t GraphOfGroups::add_vertex(std::string name, FinitePresentation pres, ModelPtr model) {
  if (find_vertex(name)) throw Error("duplicate vertex " + name);
  if (model && model->generator_names() != pres.generators()) {
    throw Error("vertex " + name + ": presentation generators differ from model generators");
  }
  vertices_.push_back({std::move(name), std::move(pres), std::move(model)});
  return vertices_.size() - 1;
}

std::size_t GraphOfGroups::add_edge(std::string name, ModelPtr model, std::string_view from,
                                    std::string_view to,
                                    std::map<std::string, std::string> const& d0,
                                    std::map<std::string, std::string> const& d1) {
  FinitePresentation pres = require_presentation(model, "edge " + name);
  auto const& v0 = vertex(from);
  auto const& v1 = vertex(to);
  auto w0 = parse_images(pres, v0.presentation, d0, "edge " + name + " d0");
  auto w1 = parse_images(pres, v1.presentation, d1, "edge " + name + " d1");
  return add_edge(std::move(name), std::move(pres), std::move(model), from, to, std::move(w0),
                  std::move(w1));
}

std::size_t GraphOfGroups::add_edge(std::string name, FinitePresentation pres, ModelPtr model,
                                    std::string_view from, std::string_view to,
                                    std::vector<Word> d0, std::vector<Word> d1) {
  if (find_edge(name)) throw Error("duplicate edge " + name);
  auto f = find_vertex(from);
  auto t = find_vertex(to);
  if (!f || !t) throw Error("edge " + name + ": unknown endpoint");
  if (d0.size() != pres.generator_count() || d1.size() != pres.generator_count()) {
    throw Error("edge " + name + ": edge maps must cover every edge generator");
  }
  for (Word const& w : d0) {
    if (w.generator_bound() > vertices_[*f].presentation.generator_count()) {
      throw Error("edge " + name + ": d0 image uses an unknown generator");
    }
  }
  for (Word const& w : d1) {
    if (w.generator_bound() > vertices_[*t].presentation.generator_count()) {
      throw Error("edge " + name + ": d1 image uses an unknown generator");
    }
  }
  edges_.push_back({std::move(name), std::move(pres), std::move(model), *f, *t, std::move(d0),
                    std::move(d1)});
  return edges_.size() - 1;
}

std::optional<std::size_t> GraphOfGroups::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> GraphOfGroups::find_edge(std::string_view name) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].name == name) return i;
  }
  return std::nullopt;
}

VertexGroup const& GraphOfGroups::vertex(std::string_view name) const {
  auto i = find_vertex(name);
  if (!i) throw Error("unknown vertex " + std::string(name));
  return vertices_[*i];
}

EdgeGroup const& GraphOfGroups::edge(std::string_view name) const {
  auto i = find_edge(name);
  if (!i) throw Error("unknown edge " + std::string(name));
  return edges_[*i];
}

GroupHom GraphOfGroups::edge_map(std::size_t e, int k) const {
  EdgeGroup const& edge = edges_.at(e);
  VertexGroup const& v = vertices_[k == 0 ? edge.from : edge.to];
  if (!v.model) throw Error("vertex " + v.name + " has no model");
  auto const& words = k == 0 ? edge.d0 : edge.d1;
  std::vector<Element> images;
  for (Word const& w : words) images.push_back(evaluate(w, *v.model, v.model->generators()));
  return GroupHom(edge.presentation.generators(), v.model, std::move(images));
}

bool GraphOfGroups::connected() const {
  if (vertices_.empty()) return true;
  std::vector<bool> seen(vertices_.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (EdgeGroup const& e : edges_) {
      for (auto [a, b] : {std::pair{e.from, e.to}, std::pair{e.to, e.from}}) {
        if (a == v && !seen[b]) {
          seen[b] = true;
          queue.push_back(b);
        }
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool GraphOfGroups::is_path() const {
  if (!connected() || edges_.size() + 1 != vertices_.size()) return false;
  std::vector<std::size_t> degree(vertices_.size(), 0);
  for (EdgeGroup const& e : edges_) {
    if (e.loop()) return false;
    ++degree[e.from];
    ++degree[e.to];
  }
  return std::all_of(degree.begin(), degree.end(), [](std::size_t d) { return d <= 2; });
}

std::vector<std::string> GraphOfGroups::validate() const {
  std::vector<std::string> problems;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    EdgeGroup const& edge = edges_[e];
    for (int k = 0; k < 2; ++k) {
      VertexGroup const& v = vertices_[k == 0 ? edge.from : edge.to];
      if (!v.model || !edge.model) continue;
      std::string const tag = "d" + std::to_string(k) + " of edge " + edge.name;
      GroupHom hom = edge_map(e, k);
      auto bad = violated_relators(edge.presentation, hom);
      for (std::size_t r : bad) {
        problems.push_back(tag + " breaks relator " +
                           edge.presentation.to_string(edge.presentation.relators()[r]));
      }
      if (bad.empty() && !hom_injective_on(hom, *edge.model, edge.model->generators())) {
        problems.push_back(tag + " is not injective");
      }
    }
  }
  return problems;
}

std::size_t SpanningTree::size() const {
  return static_cast<std::size_t>(std::count(in_tree.begin(), in_tree.end(), true));
}

bool check_reduced(GraphOfGroups const& gog) {
  auto const& vs = gog.vertices();
  for (std::size_t e = 0; e < gog.edges().size(); ++e) {
    EdgeGroup const& edge = gog.edges()[e];
    if (edge.loop()) continue;
    for (int k = 0; k < 2; ++k) {
      VertexGroup const& v = vs[k == 0 ? edge.from : edge.to];
      if (!v.model) continue;  // infinite, or at least not known to be small
      GroupHom hom = gog.edge_map(e, k);
      if (closure(*v.model, hom.images()).order() >= closure_order(*v.model)) return false;
    }
  }
  return true;
}

SpanningTree spanning_tree(GraphOfGroups const& gog) {
  auto const& vs = gog.vertices();
  SpanningTree tree;
  tree.in_tree.assign(gog.edges().size(), false);
  if (vs.empty()) return tree;
  std::size_t root = 0;
  for (std::size_t v = 1; v < vs.size(); ++v) {
    if (vs[v].name < vs[root].name) root = v;
  }
  tree.root = root;
  std::vector<bool> seen(vs.size(), false);
  seen[root] = true;
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : incident_sorted(gog, v)) {
      EdgeGroup const& edge = gog.edges()[e];
      std::size_t other = edge.from == v ? edge.to : edge.from;
      if (seen[other]) continue;
      seen[other] = true;
      tree.in_tree[e] = true;
      queue.push_back(other);
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw Error("graph of groups is not connected");
  }
  return tree;
}

FinitePresentation fundamental_presentation(GraphOfGroups const& gog, SpanningTree const& tree) {
  auto const& vs = gog.vertices();
  auto const& es = gog.edges();
  if (tree.in_tree.size() != es.size()) throw Error("spanning tree does not match the graph");
  FinitePresentation out;
  std::vector<std::size_t> offset(vs.size(), 0);
  for (std::size_t v = 0; v < vs.size(); ++v) {
    offset[v] = out.generator_count();
    for (std::string const& g : vs[v].presentation.generators()) {
      out.add_generator(vs[v].name + "." + g);
    }
  }
  std::vector<std::size_t> stable(es.size(), 0);
  for (std::size_t e = 0; e < es.size(); ++e) {
    if (!tree.contains(e)) stable[e] = out.add_generator("t_" + es[e].name);
  }
  for (std::size_t v = 0; v < vs.size(); ++v) {
    std::size_t const off = offset[v];
    for (Word const& r : vs[v].presentation.relators()) {
      out.add_relator(r.renumber([off](std::size_t g) { return g + off; }));
    }
  }
  for (std::size_t e = 0; e < es.size(); ++e) {
    EdgeGroup const& edge = es[e];
    std::size_t const o0 = offset[edge.from];
    std::size_t const o1 = offset[edge.to];
    for (std::size_t g = 0; g < edge.d0.size(); ++g) {
      Word lhs = edge.d0[g].renumber([o0](std::size_t x) { return x + o0; });
      Word rhs = edge.d1[g].renumber([o1](std::size_t x) { return x + o1; });
      if (!tree.contains(e)) {
        Word t = Word::generator(stable[e]);
        rhs = t * rhs * t.inverse();
      }
      out.add_relation(lhs, rhs);
    }
  }
  return out;
}

FinitePresentation fundamental_presentation(GraphOfGroups const& gog) {
  return fundamental_presentation(gog, spanning_tree(gog));
}

Specialisation make_specialisation(GraphOfGroups const& gog, ModelPtr target,
                                   std::map<std::string, std::string> const& images) {
  if (!target) throw Error("specialisation needs a target model");
  Specialisation spec;
  spec.target = target;
  std::set<std::string> used;
  auto target_word = [&](std::string const& text) {
    return evaluate(parse_word(text,
                               [&](std::string_view n) {
                                 auto i = target->find_generator(n);
                                 if (!i) throw Error("unknown target generator " + std::string(n));
                                 return *i;
                               }),
                    *target, target->generators());
  };
  for (VertexGroup const& v : gog.vertices()) {
    std::vector<Element> imgs;
    for (std::string const& g : v.presentation.generators()) {
      std::string key = v.name + "." + g;
      auto it = images.find(key);
      if (it == images.end()) {
        imgs.push_back(target->identity());
      } else {
        used.insert(key);
        imgs.push_back(target_word(it->second));
      }
    }
    spec.vertex_maps.emplace_back(v.presentation.generators(), target, std::move(imgs));
  }
  for (EdgeGroup const& e : gog.edges()) {
    auto it = images.find(e.name);
    if (it == images.end()) continue;
    used.insert(e.name);
    spec.stable_letters.emplace(e.name, target_word(it->second));
  }
  for (auto const& [key, w] : images) {
    if (!used.contains(key)) throw Error("witness maps unknown generator " + key);
  }
  return spec;
}

GroupHom specialisation_hom(GraphOfGroups const& gog, Specialisation const& spec,
                            FinitePresentation const& fundamental) {
  std::vector<Element> images;
  for (std::string const& name : fundamental.generators()) {
    if (name.rfind("t_", 0) == 0 && gog.find_edge(name.substr(2))) {
      auto it = spec.stable_letters.find(name.substr(2));
      images.push_back(it == spec.stable_letters.end() ? spec.target->identity() : it->second);
      continue;
    }
    auto dot = name.find('.');
    auto v = dot == std::string::npos ? std::nullopt : gog.find_vertex(name.substr(0, dot));
    if (!v) throw Error("generator " + name + " does not belong to the graph of groups");
    std::size_t g = gog.vertices()[*v].presentation.index_of(name.substr(dot + 1));
    images.push_back(spec.vertex_maps.at(*v).image(g));
  }
  return GroupHom(fundamental.generators(), spec.target, std::move(images));
}

SpecialisationReport verify_specialisation(GraphOfGroups const& gog, Specialisation const& spec) {
  SpecialisationReport report;
  auto const& vs = gog.vertices();
  if (spec.vertex_maps.size() != vs.size()) {
    report.violations.push_back("specialisation does not map every vertex");
    return report;
  }
  FiniteGroupModel const& H = *spec.target;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    for (std::size_t r : violated_relators(vs[v].presentation, spec.vertex_maps[v])) {
      report.violations.push_back("vertex " + vs[v].name + ": relator " +
                                  vs[v].presentation.to_string(vs[v].presentation.relators()[r]) +
                                  " not preserved");
    }
  }
  SpanningTree tree = spanning_tree(gog);
  for (std::size_t e = 0; e < gog.edges().size(); ++e) {
    EdgeGroup const& edge = gog.edges()[e];
    Element t = H.identity();
    if (auto it = spec.stable_letters.find(edge.name); it != spec.stable_letters.end()) {
      t = it->second;
    }
    if (tree.contains(e) && t != H.identity()) {
      report.violations.push_back("edge " + edge.name + ": tree edge with nontrivial t_e");
    }
    Element const tinv = H.inverse(t);
    for (std::size_t g = 0; g < edge.d0.size(); ++g) {
      Element a = evaluate(edge.d0[g], spec.vertex_maps[edge.from]);
      Element b = H.multiply(H.multiply(t, evaluate(edge.d1[g], spec.vertex_maps[edge.to])), tinv);
      if (a != b) {
        report.violations.push_back("edge " + edge.name + ": generator " +
                                    edge.presentation.generators()[g] +
                                    " has different images through d0 and d1");
      }
    }
  }
  return report;
}

PropernessReport verify_properness_witness(GraphOfGroups const& gog, Specialisation const& spec) {
  PropernessReport report;
  report.specialisation = verify_specialisation(gog, spec);
  FiniteGroupModel const& H = *spec.target;
  std::vector<Element> probe = H.generators();
  for (GroupHom const& hom : spec.vertex_maps) {
    for (Element const& e : hom.images()) {
      if (std::find(probe.begin(), probe.end(), e) == probe.end()) probe.push_back(e);
    }
  }
  if (auto bad = find_associativity_violation(H, probe)) {
    report.target_defect = "target " + H.name() + " is not associative: (ab)c != a(bc) for a=" +
                           to_string(bad->a) + ", b=" + to_string(bad->b) +
                           ", c=" + to_string(bad->c);
    return report;
  }
  if (!report.specialisation.valid()) return report;
  auto const& vs = gog.vertices();
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (!vs[v].model) {
      report.unchecked.push_back(vs[v].name);
      continue;
    }
    if (!hom_injective_on(spec.vertex_maps[v], *vs[v].model, vs[v].model->generators())) {
      report.non_injective.push_back(vs[v].name);
    }
  }
  return report;
}

GraphOfGroups bracket_subgraph(GraphOfGroups const& gog, std::vector<std::string> const& members,
                               std::string name) {
  auto const& vs = gog.vertices();
  auto const& es = gog.edges();
  std::vector<bool> inside(vs.size(), false);
  for (std::string const& m : members) {
    auto i = gog.find_vertex(m);
    if (!i) throw Error("unknown vertex " + m);
    inside[*i] = true;
  }
  if (members.empty()) throw Error("cannot bracket an empty subgraph");

  GraphOfGroups sub;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (inside[v]) sub.add_vertex(vs[v].name, vs[v].presentation, vs[v].model);
  }
  for (EdgeGroup const& e : es) {
    if (inside[e.from] && inside[e.to]) {
      sub.add_edge(e.name, e.presentation, e.model, vs[e.from].name, vs[e.to].name, e.d0, e.d1);
    }
  }
  if (!sub.connected()) throw Error("bracketed subgraph is not connected");
  FinitePresentation const bracket = fundamental_presentation(sub);
  auto lift = [&](std::size_t v, Word const& w) {
    std::vector<std::string> const& gens = vs[v].presentation.generators();
    return w.renumber(
        [&](std::size_t g) { return bracket.index_of(vs[v].name + "." + gens[g]); });
  };

  GraphOfGroups out;
  bool placed = false;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (!inside[v]) {
      out.add_vertex(vs[v].name, vs[v].presentation, vs[v].model);
    } else if (!placed) {
      out.add_vertex(name, bracket, nullptr);
      placed = true;
    }
  }
  for (EdgeGroup const& e : es) {
    if (inside[e.from] && inside[e.to]) continue;
    std::vector<Word> d0 = e.d0, d1 = e.d1;
    if (inside[e.from]) {
      for (Word& w : d0) w = lift(e.from, w);
    }
    if (inside[e.to]) {
      for (Word& w : d1) w = lift(e.to, w);
    }
    std::string const& from = inside[e.from] ? name : vs[e.from].name;
    std::string const& to = inside[e.to] ? name : vs[e.to].name;
    out.add_edge(e.name, e.presentation, e.model, from, to, std::move(d0), std::move(d1));
  }
  return out;
}

}  // namespace pgog
