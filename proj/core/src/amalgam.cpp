#include "pgog/amalgam.hpp"

#include <algorithm>
#include <atomic>

#include "pgog/error.hpp"

namespace pgog {

namespace {
std::atomic<std::uint64_t> next_amalgam_id{1};
}  // namespace

PathAmalgam::PathAmalgam(GraphOfGroups gog, std::size_t bound)
    : gog_(std::move(gog)), id_(next_amalgam_id++) {
  auto const& vs = gog_.vertices();
  auto const& es = gog_.edges();
  if (vs.empty()) throw Error("empty graph of groups");
  if (!gog_.is_path()) throw Error("normal forms need a path graph without loops");
  for (VertexGroup const& v : vs) {
    if (!v.model) throw Error("vertex " + v.name + " has no finite model");
  }
  for (EdgeGroup const& e : es) {
    if (!e.model) throw Error("edge " + e.name + " has no finite model");
  }

  // Walk the path from the endpoint with the least name.
  std::vector<std::size_t> degree(vs.size(), 0);
  for (EdgeGroup const& e : es) {
    ++degree[e.from];
    ++degree[e.to];
  }
  std::size_t start = vs.size();
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (degree[v] <= 1 && (start == vs.size() || vs[v].name < vs[start].name)) start = v;
  }
  position_.assign(vs.size(), 0);
  std::vector<bool> used(es.size(), false);
  order_.push_back(start);
  for (std::size_t cur = start; order_.size() < vs.size();) {
    for (std::size_t e = 0; e < es.size(); ++e) {
      if (used[e] || (es[e].from != cur && es[e].to != cur)) continue;
      used[e] = true;
      link_.push_back(e);
      cur = es[e].from == cur ? es[e].to : es[e].from;
      position_[cur] = order_.size();
      order_.push_back(cur);
      break;
    }
  }

  for (VertexGroup const& v : vs) {
    tables_.push_back(
        std::make_shared<ClosureTable const>(closure(*v.model, v.model->generators(), bound)));
  }

  ends_.resize(es.size());
  for (std::size_t e = 0; e < es.size(); ++e) {
    ClosureTable const edge_table = closure(*es[e].model, es[e].model->generators(), bound);
    GroupHom const maps[2] = {gog_.edge_map(e, 0), gog_.edge_map(e, 1)};
    std::vector<Element> images[2];
    for (std::size_t i = 0; i < edge_table.order(); ++i) {
      for (int k = 0; k < 2; ++k) images[k].push_back(pgog::evaluate(edge_table.word_at(i), maps[k]));
    }
    for (int k = 0; k < 2; ++k) {
      std::size_t const v = k == 0 ? es[e].from : es[e].to;
      FiniteGroupModel const& G = *vs[v].model;
      ClosureTable const& table = *tables_[v];
      EndData& end = ends_[e][k];
      end.transversal.edge = e;
      end.transversal.end = k;
      for (std::size_t i = 0; i < images[k].size(); ++i) {
        if (!end.across.emplace(images[k][i], images[1 - k][i]).second) {
          throw Error("edge " + es[e].name + ": d" + std::to_string(k) + " is not injective");
        }
      }
      constexpr std::uint32_t unset = ~std::uint32_t{0};
      end.coset.assign(table.order(), unset);
      for (std::size_t i = 0; i < table.order(); ++i) {
        if (end.coset[i] != unset) continue;
        Element const& s = table.elements()[i];
        auto const c = static_cast<std::uint32_t>(end.transversal.reps.size());
        end.transversal.reps.push_back(s);
        for (Element const& a : images[k]) end.coset[table.index_of(G.multiply(a, s))] = c;
      }
    }
  }
}

Transversal const& PathAmalgam::transversal(std::size_t edge, int end) const {
  if (edge >= ends_.size() || (end != 0 && end != 1)) throw Error("no such edge end");
  return ends_[edge][end].transversal;
}

std::size_t PathAmalgam::arrival(std::size_t edge, bool forward) const {
  EdgeGroup const& e = gog_.edges()[edge];
  return forward ? e.to : e.from;
}

void PathAmalgam::walk(Raw& raw, std::size_t& at, std::size_t to) const {
  while (at != to) {
    std::size_t const i = position_[at];
    std::size_t const j = position_[to] > i ? i + 1 : i - 1;
    std::size_t const edge = link_[std::min(i, j)];
    bool const forward = gog_.edges()[edge].from == at;
    at = arrival(edge, forward);
    raw.ys.emplace_back(edge, forward);
    raw.xs.push_back(gog_.vertices()[at].model->identity());
  }
}

ReducedWord PathAmalgam::canonical(Raw raw, std::vector<Step> suffix) const {
  // `suffix` is stored back-to-front: suffix.back() is the first step.
  auto const& vs = gog_.vertices();
  Element p = raw.xs.back();
  for (std::size_t i = raw.ys.size(); i-- > 0;) {
    auto const [edge, forward] = raw.ys[i];
    std::size_t const v = arrival(edge, forward);
    std::size_t const u = forward ? gog_.edges()[edge].from : gog_.edges()[edge].to;
    int const kv = forward ? 1 : 0;
    EndData const& end = ends_[edge][kv];
    FiniteGroupModel const& Gv = *vs[v].model;
    FiniteGroupModel const& Gu = *vs[u].model;
    std::uint32_t const c = end.coset[tables_[v]->index_of(p)];
    Element const& x = raw.xs[i];
    if (c == 0 && !suffix.empty() && suffix.back().edge == edge &&
        suffix.back().forward != forward) {
      // y p y^-1 with p in the edge image folds back into G_u
      Element folded = Gu.multiply(Gu.multiply(x, end.across.at(p)), suffix.back().rep);
      suffix.pop_back();
      p = std::move(folded);
      continue;
    }
    Element const& s = end.transversal.reps[c];
    Element a = Gv.multiply(p, Gv.inverse(s));
    suffix.push_back({edge, forward, s});
    p = Gu.multiply(x, end.across.at(a));
  }
  ReducedWord out;
  out.owner = id_;
  out.head_trivial = p == vs[base()].model->identity();
  out.head = std::move(p);
  out.steps.assign(suffix.rbegin(), suffix.rend());
  return out;
}

void PathAmalgam::require_owned(ReducedWord const& a) const {
  if (a.owner != id_) throw Error("reduced word belongs to a different graph of groups");
}

ReducedWord PathAmalgam::identity() const {
  Raw raw;
  raw.xs.push_back(gog_.vertices()[base()].model->identity());
  return canonical(std::move(raw), {});
}

ReducedWord PathAmalgam::letter(std::size_t vertex, Element const& x) const {
  return normal_form({{vertex, x}});
}

ReducedWord PathAmalgam::normal_form(
    std::vector<std::pair<std::size_t, Element>> const& letters) const {
  auto const& vs = gog_.vertices();
  Raw raw;
  std::size_t at = base();
  raw.xs.push_back(vs[at].model->identity());
  for (auto const& [v, x] : letters) {
    if (v >= vs.size() || !vs[v].model->owns(x)) {
      throw Error("letter is not an element of its vertex group");
    }
    walk(raw, at, v);
    raw.xs.back() = vs[v].model->multiply(raw.xs.back(), x);
  }
  walk(raw, at, base());
  return canonical(std::move(raw), {});
}

ReducedWord PathAmalgam::normal_form(Word const& w, FinitePresentation const& fundamental) const {
  auto const& vs = gog_.vertices();
  std::vector<std::pair<std::size_t, Element>> letters;
  for (Letter const& l : w.letters()) {
    std::string const& name = fundamental.generators().at(l.gen);
    auto dot = name.find('.');
    auto v = dot == std::string::npos ? std::nullopt : gog_.find_vertex(name.substr(0, dot));
    if (!v) throw Error("generator " + name + " is not a vertex-group generator");
    FiniteGroupModel const& G = *vs[*v].model;
    letters.emplace_back(*v, G.power(G.generator(name.substr(dot + 1)), l.exp));
  }
  return normal_form(letters);
}

ReducedWord PathAmalgam::multiply(ReducedWord const& a, ReducedWord const& b) const {
  require_owned(a);
  require_owned(b);
  FiniteGroupModel const& G0 = *gog_.vertices()[base()].model;
  Raw raw;
  raw.xs.push_back(a.head);
  for (Step const& s : a.steps) {
    raw.ys.emplace_back(s.edge, s.forward);
    raw.xs.push_back(s.rep);
  }
  raw.xs.back() = G0.multiply(raw.xs.back(), b.head);
  return canonical(std::move(raw), std::vector<Step>(b.steps.rbegin(), b.steps.rend()));
}

ReducedWord PathAmalgam::inverse(ReducedWord const& a) const {
  require_owned(a);
  auto const& vs = gog_.vertices();
  Raw raw;
  for (std::size_t i = a.steps.size(); i-- > 0;) {
    Step const& s = a.steps[i];
    FiniteGroupModel const& G = *vs[arrival(s.edge, s.forward)].model;
    raw.xs.push_back(G.inverse(s.rep));
    raw.ys.emplace_back(s.edge, !s.forward);
  }
  raw.xs.push_back(vs[base()].model->inverse(a.head));
  return canonical(std::move(raw), {});
}

Element PathAmalgam::evaluate(ReducedWord const& a, Specialisation const& spec) const {
  require_owned(a);
  FiniteGroupModel const& H = *spec.target;
  auto image = [&](std::size_t v, Element const& x) {
    ClosureTable const& t = *tables_[v];
    return pgog::evaluate(t.word_of(x), spec.vertex_maps.at(v));
  };
  Element out = image(base(), a.head);
  for (Step const& s : a.steps) {
    out = H.multiply(out, image(arrival(s.edge, s.forward), s.rep));
  }
  return out;
}

std::string PathAmalgam::to_string(ReducedWord const& a) const {
  auto const& vs = gog_.vertices();
  std::string out = vs[base()].name + ":" + pgog::to_string(a.head);
  for (Step const& s : a.steps) {
    EdgeGroup const& e = gog_.edges()[s.edge];
    out += std::string(" -") + e.name + (s.forward ? ">" : "<") + " " +
           vs[arrival(s.edge, s.forward)].name + ":" + pgog::to_string(s.rep);
  }
  return out;
}

}  // namespace pgog
