#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "racg/vertex_set.hpp"

namespace racg {

/// Defining graph of a right-angled Coxeter system: an edge means the two
/// generators commute. Generator order is declaration order and fixes every
/// lexicographic tie-break in the library.
class PresentationGraph {
 public:
  PresentationGraph() = default;

  /// Throws InputError on duplicate or malformed names, or too many generators.
  explicit PresentationGraph(std::vector<std::string> names);

  /// Throws InputError on self-loops and out-of-range indices.
  void add_edge(int u, int v);

  int size() const { return static_cast<int>(names_.size()); }
  VertexSet all() const { return VertexSet::range(size()); }

  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  /// -1 if absent.
  int index_of(std::string_view name) const;

  bool adjacent(int u, int v) const { return adjacency_[static_cast<std::size_t>(u)].contains(v); }
  VertexSet neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int edge_count() const;
  /// Edges as (u, v) with u < v, ordered lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  /// Throws InputError unless every member is a valid index.
  void check_subset(VertexSet a) const;

  friend bool operator==(const PresentationGraph&, const PresentationGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> adjacency_;
};

/// Generators adjacent to every member of `a`; all of S for the empty set.
VertexSet link(const PresentationGraph& graph, VertexSet a);

bool is_clique(const PresentationGraph& graph, VertexSet a);

struct Separation {
  bool separates = false;
  /// Components of the graph minus C, ordered by least member.
  std::vector<VertexSet> components;
};

/// Connected components of the full subgraph on `within`, by least member.
std::vector<VertexSet> components_of(const PresentationGraph& graph, VertexSet within);

Separation separates(const PresentationGraph& graph, VertexSet c);

/// Maximal join decomposition: connected components of the complement graph,
/// ordered by least member.
std::vector<VertexSet> join_factors(const PresentationGraph& graph);

/// join_factors restricted to the full subgraph on `within`.
std::vector<VertexSet> join_factors_within(const PresentationGraph& graph, VertexSet within);

/// Full subgraph on `a`, reindexed 0..|a|-1 in the parent's order.
PresentationGraph induced(const PresentationGraph& graph, VertexSet a);

/// Map a vertex set of induced(graph, within) back to parent indices.
VertexSet lift(VertexSet sub, VertexSet within);
/// Map a vertex set of the parent (contained in `within`) to induced indices.
VertexSet restrict_to(VertexSet parent, VertexSet within);

/// Relabel: vertex i of the result is vertex order[i] of `graph`.
PresentationGraph permuted(const PresentationGraph& graph, const std::vector<int>& order);

}  // namespace racg
