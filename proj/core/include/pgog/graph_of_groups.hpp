#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgog/hom.hpp"
#include "pgog/models.hpp"
#include "pgog/presentation.hpp"
#include "pgog/word.hpp"

namespace pgog {

/// A vertex group. `model` may be null for groups only known by a
/// presentation (e.g. a bracketed subgraph); such vertices count as infinite.
struct VertexGroup {
  std::string name;
  FinitePresentation presentation;
  ModelPtr model;
};

/// An edge group with its two monomorphisms, stored as images of each edge
/// generator written as words over the endpoint vertex's generators.
struct EdgeGroup {
  std::string name;
  FinitePresentation presentation;
  ModelPtr model;
  std::size_t from = 0;  // d_0
  std::size_t to = 0;    // d_1
  std::vector<Word> d0;
  std::vector<Word> d1;

  bool loop() const noexcept { return from == to; }
};

class GraphOfGroups {
 public:
  /// Vertex carrying a model with a presentation on its generator names.
  std::size_t add_vertex(std::string name, ModelPtr model);
  std::size_t add_vertex(std::string name, FinitePresentation pres, ModelPtr model = nullptr);

  /// `d0` / `d1` map each edge generator name to a word over the generators
  /// of the `from` / `to` vertex. Missing generators are an error.
  std::size_t add_edge(std::string name, ModelPtr model, std::string_view from,
                       std::string_view to, std::map<std::string, std::string> const& d0,
                       std::map<std::string, std::string> const& d1);
  std::size_t add_edge(std::string name, FinitePresentation pres, ModelPtr model,
                       std::string_view from, std::string_view to, std::vector<Word> d0,
                       std::vector<Word> d1);

  std::vector<VertexGroup> const& vertices() const noexcept { return vertices_; }
  std::vector<EdgeGroup> const& edges() const noexcept { return edges_; }
  VertexGroup const& vertex(std::string_view name) const;
  EdgeGroup const& edge(std::string_view name) const;
  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_edge(std::string_view name) const;

  /// ∂_{e,k} as a hom into the endpoint model (which must exist).
  GroupHom edge_map(std::size_t e, int k) const;

  bool connected() const;
  /// Path graph: tree, no loops, every vertex of degree at most 2.
  bool is_path() const;

  /// Problems with the edge monomorphisms: relators not preserved or
  /// non-injective maps. Ends without a model are not checked.
  std::vector<std::string> validate() const;

 private:
  std::vector<VertexGroup> vertices_;
  std::vector<EdgeGroup> edges_;
};

struct SpanningTree {
  std::size_t root = 0;
  std::vector<bool> in_tree;  // indexed by edge

  std::size_t size() const;
  bool contains(std::size_t e) const { return in_tree.at(e); }
};

/// True iff no non-loop edge map is onto its endpoint group.
bool check_reduced(GraphOfGroups const& gog);

/// BFS from the lexicographically least vertex name; incident edges are
/// taken in name order. Throws on a disconnected graph.
SpanningTree spanning_tree(GraphOfGroups const& gog);

/// Generators "V.g" for each vertex generator, then "t_E" for each edge off
/// the tree. Vertex relators plus d0(g) = d1(g) (tree edges) or
/// d0(g) = t_E d1(g) t_E^-1 for every edge generator g.
FinitePresentation fundamental_presentation(GraphOfGroups const& gog, SpanningTree const& tree);
FinitePresentation fundamental_presentation(GraphOfGroups const& gog);

/// Target group, one hom per vertex (sources = vertex generators), and
/// stable-letter values for off-tree edges (missing means identity).
struct Specialisation {
  ModelPtr target;
  std::vector<GroupHom> vertex_maps;
  std::map<std::string, Element> stable_letters;
};

/// Builds a specialisation from per-vertex maps "V.g" -> word over target
/// generators (and "E" -> word for stable letters). Unmapped vertex
/// generators go to the identity.
Specialisation make_specialisation(GraphOfGroups const& gog, ModelPtr target,
                                   std::map<std::string, std::string> const& images);

/// The specialisation as a hom on the fundamental presentation's
/// generators ("V.g" and "t_E").
GroupHom specialisation_hom(GraphOfGroups const& gog, Specialisation const& spec,
                            FinitePresentation const& fundamental);

struct SpecialisationReport {
  std::vector<std::string> violations;
  bool valid() const noexcept { return violations.empty(); }
};

SpecialisationReport verify_specialisation(GraphOfGroups const& gog, Specialisation const& spec);

struct PropernessReport {
  SpecialisationReport specialisation;
  /// Set when the target law fails associativity on its generators and
  /// the vertex images; such a target is not a group.
  std::optional<std::string> target_defect;
  std::vector<std::string> non_injective;
  std::vector<std::string> unchecked;  // vertices without a model
  bool certified() const noexcept {
    return specialisation.valid() && !target_defect && non_injective.empty() &&
           unchecked.empty();
  }
};

PropernessReport verify_properness_witness(GraphOfGroups const& gog, Specialisation const& spec);

/// Collapses the connected subgraph spanned by `members` (all edges with
/// both ends inside) to one vertex named `name`, presented by the
/// subgraph's fundamental presentation. Edges leaving the subgraph are
/// rewritten over its generators "V.g".
GraphOfGroups bracket_subgraph(GraphOfGroups const& gog, std::vector<std::string> const& members,
                               std::string name);

}  // namespace pgog
