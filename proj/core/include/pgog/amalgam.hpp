#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pgog/closure.hpp"
#include "pgog/graph_of_groups.hpp"
#include "pgog/models.hpp"
#include "pgog/presentation.hpp"
#include "pgog/word.hpp"

namespace pgog {

/// Traversal of an edge: forward goes d0 -> d1. `rep` lies in the vertex
/// reached and is a right coset representative of the edge image there.
struct Step {
  std::size_t edge = 0;
  bool forward = true;
  Element rep;

  friend bool operator==(Step const&, Step const&) = default;
};

/// head * y_1 rep_1 * ... * y_k rep_k along a closed walk from the base
/// vertex, with no backtracking y, y^-1 across a trivial representative.
struct ReducedWord {
  std::uint64_t owner = 0;  // id of the amalgam that built it
  Element head;
  bool head_trivial = true;
  std::vector<Step> steps;

  /// True iff the element is trivial.
  bool empty() const noexcept { return steps.empty() && head_trivial; }
  std::size_t syllables() const noexcept { return steps.size() + (head_trivial ? 0 : 1); }

  friend bool operator==(ReducedWord const& a, ReducedWord const& b) {
    return a.owner == b.owner && a.head == b.head && a.steps == b.steps;
  }
};

/// Right transversal of one edge image inside one endpoint group.
struct Transversal {
  std::size_t edge = 0;
  int end = 0;
  std::vector<Element> reps;  // reps[0] is the identity
};

/// Normal forms for the fundamental group of a path of finite groups.
/// Vertex groups are enumerated once; transversals use the shortlex-least
/// element of each coset.
class PathAmalgam {
 public:
  explicit PathAmalgam(GraphOfGroups gog, std::size_t bound = size_guard());

  GraphOfGroups const& graph() const noexcept { return gog_; }
  std::size_t base() const noexcept { return order_.front(); }
  std::uint64_t id() const noexcept { return id_; }

  Transversal const& transversal(std::size_t edge, int end) const;

  ReducedWord identity() const;
  /// Single vertex-group element.
  ReducedWord letter(std::size_t vertex, Element const& x) const;
  /// Word over the fundamental presentation generators "V.g".
  ReducedWord normal_form(Word const& w, FinitePresentation const& fundamental) const;
  /// Sequence of vertex-group elements.
  ReducedWord normal_form(std::vector<std::pair<std::size_t, Element>> const& letters) const;
  ReducedWord multiply(ReducedWord const& a, ReducedWord const& b) const;
  ReducedWord inverse(ReducedWord const& a) const;

  /// Image under a specialisation (tree edges map to the identity).
  Element evaluate(ReducedWord const& a, Specialisation const& spec) const;

  std::string to_string(ReducedWord const& a) const;

 private:
  struct EndData {
    std::vector<std::uint32_t> coset;  // closure index -> coset number
    Transversal transversal;
    std::unordered_map<Element, Element, ElementHash> across;  // image -> other end
  };
  struct Raw {
    std::vector<Element> xs;
    std::vector<std::pair<std::size_t, bool>> ys;
  };

  ReducedWord canonical(Raw raw, std::vector<Step> suffix) const;
  std::size_t arrival(std::size_t edge, bool forward) const;
  void walk(Raw& raw, std::size_t& at, std::size_t to) const;
  void require_owned(ReducedWord const& a) const;

  GraphOfGroups gog_;
  std::uint64_t id_;
  std::vector<std::size_t> order_;     // vertices along the path
  std::vector<std::size_t> position_;  // vertex -> position
  std::vector<std::size_t> link_;      // position i -> edge to position i+1
  std::vector<std::shared_ptr<ClosureTable const>> tables_;
  std::vector<std::array<EndData, 2>> ends_;
};

}  // namespace pgog
