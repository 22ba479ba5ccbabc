#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "racg/word.hpp"

namespace racg {

enum class TauMode { InfiniteCase, FiniteCase };

/// Path t0..tm in the presentation graph joining the two fan letters, with
/// every interior vertex outside `forbidden`.
struct TauPath {
  std::vector<Letter> vertices;
  VertexSet forbidden;
  TauMode mode = TauMode::FiniteCase;
};

/// Deterministic path choice: lex-least shortest path with admissible
/// interior, then the fixed-up forms (a, v, a) and (a, b, w, b) when it has
/// fewer than two edges. InternalError when nothing admissible exists.
TauPath tau_path(const PresentationGraph& graph, std::span<const Letter> prefix, Letter a, Letter b);

struct Fan {
  NormalForm base;
  Word prefix;
  Letter left = 0;
  Letter right = 0;
  TauPath tau;
};

Fan build_fan(const PresentationGraph& graph, std::span<const Letter> prefix, Letter a, Letter b);

enum class EdgeKind { Prefix, LeftFan, Interior, RightFan };
std::string to_string(EdgeKind k);

struct FilterEdge {
  int lower = 0;  // vertex ids
  int upper = 0;
  Letter label = 0;
  EdgeKind kind = EdgeKind::Prefix;
  bool is_tree = true;
  bool on_alpha = false;
  bool on_beta = false;
  int fan = -1;  // owning fan, -1 for prefix edges
};

struct FilterVertex {
  int level = 0;
  int planar_index = 0;
  int parent_edge = -1;          // tree edge below, -1 at the base point
  std::vector<int> down_edges;   // left to right
  std::vector<int> up_edges;     // left to right
  int fan = -1;                  // fan based here, -1 if none
  bool on_alpha = false;
  bool on_beta = false;
};

struct FilterFan {
  int base_vertex = 0;
  Fan fan;
};

/// Leveled planar graph between two geodesics. Levels 0..n hold the common
/// prefix; fans hang from every vertex of levels n..top-1.
struct Filter {
  PresentationGraph graph;
  Word alpha;
  Word beta;
  int prefix_length = 0;  // n
  int depth = 0;
  std::vector<FilterVertex> vertices;
  std::vector<FilterEdge> edges;
  std::vector<FilterFan> fans;
  std::vector<std::vector<int>> levels;  // vertex ids, left to right

  int top() const { return static_cast<int>(levels.size()) - 1; }
  /// Labels along the tree path from the base point.
  Word tree_word(int vertex) const;
};

/// Rays are finite geodesic words at least n + depth long, where n is their
/// common prefix length (capped so that both rays cover every built level).
Filter build_filter(const PresentationGraph& graph, std::span<const Letter> alpha, std::span<const Letter> beta,
                    int depth);

struct TreeView {
  std::vector<int> edges;  // ids of tree edges
  int vertex_count = 0;
  bool connected = false;
  bool acyclic = false;
};

TreeView extract_tree(const Filter& filter);

struct FactViolation {
  int fact = 0;
  int vertex = -1;
  int edge = -1;
  std::string detail;
};

struct FactReport {
  std::vector<FactViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Combinatorial facts (1)-(7). Down-edge facts are checked on levels
/// 1..top, up-edge facts on levels n..top-1.
FactReport verify_facts(const Filter& filter);

struct CayleyReport {
  std::vector<std::vector<NormalForm>> elements;  // per level, left to right
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Evaluates every tree path in the group and checks level = length and
/// that each edge multiplies by its label.
CayleyReport map_to_cayley(const Filter& filter);

struct FactorBound {
  int max_length = 0;
  int bound = 0;  // 3|S|
  bool pass = true;
  /// Upward tree factor paths longer than |S| followed by two repeated letters.
  std::uint64_t repeat_violations = 0;
};

/// Longest upward tree path that is a factor path and meets alpha and beta
/// at most in its first vertex.
FactorBound check_factor_bound(const Filter& filter);

struct DotOptions {
  std::string name = "filter";
  bool show_elements = false;
};

std::string export_dot(const Filter& filter, const DotOptions& options = {});

}  // namespace racg
