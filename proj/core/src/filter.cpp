#include "racg/filter.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "racg/errors.hpp"

namespace racg {

namespace {

// Lex-least shortest path from `from` to `to` whose interior avoids
// `forbidden`; empty if none.
std::vector<Letter> admissible_path(const PresentationGraph& graph, VertexSet forbidden, int from, int to) {
  std::vector<int> dist(static_cast<std::size_t>(graph.size()), -1);
  dist[static_cast<std::size_t>(to)] = 0;
  std::deque<int> queue{to};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    graph.neighbors(x).for_each([&](int y) {
      if (dist[static_cast<std::size_t>(y)] >= 0) return;
      dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
      if (!forbidden.contains(y)) queue.push_back(y);
    });
  }
  if (dist[static_cast<std::size_t>(from)] < 0) return {};
  std::vector<Letter> path{static_cast<Letter>(from)};
  int cur = from;
  while (cur != to) {
    int next = -1;
    graph.neighbors(cur).for_each([&](int y) {
      if (next >= 0 || dist[static_cast<std::size_t>(y)] != dist[static_cast<std::size_t>(cur)] - 1) return;
      if (y == to || !forbidden.contains(y)) next = y;
    });
    if (next < 0) return {};
    path.push_back(static_cast<Letter>(next));
    cur = next;
  }
  return path;
}

int least_allowed_neighbor(const PresentationGraph& graph, VertexSet forbidden, int v) {
  return (graph.neighbors(v) - forbidden).least();
}

std::string describe(const PresentationGraph& graph, std::span<const Letter> prefix, Letter a, Letter b,
                     VertexSet forbidden) {
  std::string out = "prefix (" + format_word(graph, prefix) + "), a=" + graph.name(a) + ", b=" + graph.name(b) +
                    ", forbidden {";
  bool first = true;
  forbidden.for_each([&](int v) {
    out += (first ? "" : ",") + graph.name(v);
    first = false;
  });
  return out + "}";
}

TauPath tau_path_with(const PresentationGraph& graph, const FactorPairs& pairs, std::span<const Letter> prefix,
                      Letter a, Letter b) {
  TauPath tau;
  const std::size_t start = longest_terminal_factor_suffix(graph, pairs, prefix);
  const VertexSet suffix = letters_of(prefix.subspan(start));
  if (!suffix.empty() && !is_clique(graph, suffix)) {
    const FactorPair cover = *pairs.cover(suffix);
    const VertexSet la = suffix & cover.a;
    const VertexSet lb = suffix & cover.b;
    const bool a_infinite = !is_clique(graph, la);
    const bool b_infinite = !is_clique(graph, lb);
    VertexSet c;
    if (a_infinite && b_infinite) {
      c = lb.contains(prefix.back()) ? lb : la;
    } else {
      c = a_infinite ? la : lb;
    }
    tau.forbidden = c | link(graph, c);
    tau.mode = TauMode::InfiniteCase;
  } else {
    tau.forbidden = descent_set(graph, normal_form(graph, prefix));
    tau.mode = TauMode::FiniteCase;
  }

  const VertexSet forbidden = tau.forbidden;
  auto fail = [&](const std::string& what) {
    return InternalError("tau_path: " + what + " for " + describe(graph, prefix, a, b, forbidden));
  };

  if (a == b) {
    const int v = least_allowed_neighbor(graph, forbidden, a);
    if (v < 0) throw fail("no admissible neighbor");
    tau.vertices = {a, static_cast<Letter>(v), a};
    return tau;
  }
  std::vector<Letter> path = admissible_path(graph, forbidden, a, b);
  if (path.empty()) throw fail("no admissible path");
  if (path.size() == 2) {
    if (!forbidden.contains(b)) {
      const int w = least_allowed_neighbor(graph, forbidden, b);
      if (w < 0) throw fail("no admissible neighbor of b");
      path = {a, b, static_cast<Letter>(w), b};
    } else if (!forbidden.contains(a)) {
      const int w = least_allowed_neighbor(graph, forbidden, a);
      if (w < 0) throw fail("no admissible neighbor of a");
      path = {a, static_cast<Letter>(w), a, b};
    } else {
      // Both endpoints forbidden: shortest detour of length at least two.
      std::vector<Letter> best;
      (graph.neighbors(a) - forbidden).for_each([&](int x) {
        std::vector<Letter> rest = admissible_path(graph, forbidden, x, b);
        if (rest.empty()) return;
        if (best.empty() || rest.size() + 1 < best.size()) {
          best = {a};
          best.insert(best.end(), rest.begin(), rest.end());
        }
      });
      if (best.empty()) throw fail("no admissible detour");
      path = std::move(best);
    }
  }
  tau.vertices = std::move(path);
  return tau;
}

void check_fan_letters(const PresentationGraph& graph, std::span<const Letter> prefix, Letter a, Letter b) {
  check_word(graph, prefix);
  if (a >= graph.size() || b >= graph.size()) throw InputError("fan letter out of range");
  if (!is_geodesic(graph, prefix)) throw InputError("fan prefix is not geodesic");
  if (!extends_geodesic(graph, prefix, a) || !extends_geodesic(graph, prefix, b)) {
    throw InputError("fan letters must extend the prefix geodesically");
  }
}

Fan fan_with(const PresentationGraph& graph, const FactorPairs& pairs, std::span<const Letter> prefix, Letter a,
             Letter b) {
  Fan fan;
  fan.base = normal_form(graph, prefix);
  fan.prefix.assign(prefix.begin(), prefix.end());
  fan.left = a;
  fan.right = b;
  fan.tau = tau_path_with(graph, pairs, prefix, a, b);
  const auto& t = fan.tau.vertices;
  Word probe = fan.prefix;
  probe.resize(prefix.size() + 2);
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (!graph.adjacent(t[i], t[i + 1])) throw InternalError("tau path steps are not commuting pairs");
    probe[prefix.size()] = t[i];
    probe[prefix.size() + 1] = t[i + 1];
    if (!is_geodesic(graph, probe)) {
      throw InternalError("fan loop is not geodesic: " + format_word(graph, probe));
    }
  }
  return fan;
}

}  // namespace

TauPath tau_path(const PresentationGraph& graph, std::span<const Letter> prefix, Letter a, Letter b) {
  check_fan_letters(graph, prefix, a, b);
  return tau_path_with(graph, FactorPairs(graph), prefix, a, b);
}

Fan build_fan(const PresentationGraph& graph, std::span<const Letter> prefix, Letter a, Letter b) {
  check_fan_letters(graph, prefix, a, b);
  return fan_with(graph, FactorPairs(graph), prefix, a, b);
}

std::string to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Prefix: return "prefix";
    case EdgeKind::LeftFan: return "left";
    case EdgeKind::Interior: return "interior";
    case EdgeKind::RightFan: return "right";
  }
  return "?";
}

Word Filter::tree_word(int vertex) const {
  Word out;
  for (int e = vertices.at(static_cast<std::size_t>(vertex)).parent_edge; e >= 0;) {
    const FilterEdge& edge = edges[static_cast<std::size_t>(e)];
    out.push_back(edge.label);
    e = vertices[static_cast<std::size_t>(edge.lower)].parent_edge;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

class FilterBuilder {
 public:
  explicit FilterBuilder(Filter& f) : f_(f) {}

  int add_vertex(int level) {
    f_.vertices.push_back(FilterVertex{});
    f_.vertices.back().level = level;
    return static_cast<int>(f_.vertices.size()) - 1;
  }

  int add_edge(int lower, int upper, Letter label, EdgeKind kind, bool tree) {
    FilterEdge e;
    e.lower = lower;
    e.upper = upper;
    e.label = label;
    e.kind = kind;
    e.is_tree = tree;
    f_.edges.push_back(e);
    const int id = static_cast<int>(f_.edges.size()) - 1;
    vertex(upper).down_edges.push_back(id);
    if (tree) vertex(upper).parent_edge = id;
    return id;
  }

  FilterVertex& vertex(int v) { return f_.vertices[static_cast<std::size_t>(v)]; }
  FilterEdge& edge(int e) { return f_.edges[static_cast<std::size_t>(e)]; }

 private:
  Filter& f_;
};

}  // namespace

Filter build_filter(const PresentationGraph& graph, std::span<const Letter> alpha, std::span<const Letter> beta,
                    int depth) {
  check_word(graph, alpha);
  check_word(graph, beta);
  if (!is_geodesic(graph, alpha) || !is_geodesic(graph, beta)) throw InputError("filter rays must be geodesic");
  if (depth < 0) throw InputError("filter depth must be non-negative");
  const auto [ia, ib] = std::mismatch(alpha.begin(), alpha.end(), beta.begin(), beta.end());
  const int common = static_cast<int>(ia - alpha.begin());
  const int shortest = static_cast<int>(std::min(alpha.size(), beta.size()));
  if (shortest - depth < 0) throw InputError("filter depth exceeds ray length");
  const int n = std::min(common, shortest - depth);

  Filter f;
  f.graph = graph;
  f.alpha.assign(alpha.begin(), alpha.end());
  f.beta.assign(beta.begin(), beta.end());
  f.prefix_length = n;
  f.depth = depth;
  const int top = n + depth;
  f.levels.resize(static_cast<std::size_t>(top) + 1);
  FilterBuilder b(f);

  int v = b.add_vertex(0);
  b.vertex(v).on_alpha = b.vertex(v).on_beta = true;
  f.levels[0] = {v};
  for (int j = 0; j < n; ++j) {
    const int u = b.add_vertex(j + 1);
    const int e = b.add_edge(v, u, alpha[static_cast<std::size_t>(j)], EdgeKind::Prefix, true);
    b.edge(e).on_alpha = b.edge(e).on_beta = true;
    b.vertex(v).up_edges.push_back(e);
    b.vertex(u).on_alpha = b.vertex(u).on_beta = true;
    f.levels[static_cast<std::size_t>(j) + 1] = {u};
    v = u;
  }

  const FactorPairs pairs(graph);
  for (int level = n; level < top; ++level) {
    const std::vector<int> row = f.levels[static_cast<std::size_t>(level)];
    std::vector<int> next;
    std::vector<std::vector<int>> fan_ends;
    for (std::size_t idx = 0; idx < row.size(); ++idx) {
      const int base = row[idx];
      int left_edge = -1, right_edge = -1;
      for (int e : b.vertex(base).up_edges) {
        if (b.edge(e).kind == EdgeKind::LeftFan) left_edge = e;
        if (b.edge(e).kind == EdgeKind::RightFan) right_edge = e;
      }
      if ((left_edge < 0) != (idx == 0) || (right_edge < 0) != (idx + 1 == row.size())) {
        throw InternalError("filter row " + std::to_string(level) + " has inconsistent loop edges");
      }
      const Letter a = left_edge >= 0 ? b.edge(left_edge).label : alpha[static_cast<std::size_t>(level)];
      const Letter c = right_edge >= 0 ? b.edge(right_edge).label : beta[static_cast<std::size_t>(level)];
      const Word prefix = f.tree_word(base);

      const int fan_id = static_cast<int>(f.fans.size());
      f.fans.push_back(FilterFan{base, fan_with(graph, pairs, prefix, a, c)});
      b.vertex(base).fan = fan_id;
      const std::vector<Letter> t = f.fans.back().fan.tau.vertices;
      const std::size_t m = t.size() - 1;

      std::vector<int> ups;
      std::vector<int> ends;
      for (std::size_t i = 0; i <= m; ++i) {
        int e;
        if (i == 0 && left_edge >= 0) {
          e = left_edge;
        } else if (i == m && right_edge >= 0) {
          e = right_edge;
        } else {
          const EdgeKind kind = i == 0 ? EdgeKind::LeftFan : i == m ? EdgeKind::RightFan : EdgeKind::Interior;
          const int u = b.add_vertex(level + 1);
          e = b.add_edge(base, u, t[i], kind, true);
          if (i == 0) b.edge(e).on_alpha = b.vertex(u).on_alpha = true;
          if (i == m) b.edge(e).on_beta = b.vertex(u).on_beta = true;
        }
        b.edge(e).fan = fan_id;
        ups.push_back(e);
        ends.push_back(b.edge(e).upper);
      }
      b.vertex(base).up_edges = std::move(ups);
      for (int u : ends) {
        if (next.empty() || next.back() != u) next.push_back(u);
      }
      fan_ends.push_back(std::move(ends));
    }
    for (std::size_t i = 0; i < next.size(); ++i) b.vertex(next[i]).planar_index = static_cast<int>(i);
    f.levels[static_cast<std::size_t>(level) + 1] = next;

    if (level + 2 > top) continue;
    // Close the fan loops: the upper left edge of each loop is the non-tree one.
    for (std::size_t k = 0; k < fan_ends.size(); ++k) {
      const std::vector<Letter>& t = f.fans[f.fans.size() - fan_ends.size() + k].fan.tau.vertices;
      const std::vector<int>& ends = fan_ends[k];
      for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
        const int apex = b.add_vertex(level + 2);
        const int upper_left = b.add_edge(ends[i], apex, t[i + 1], EdgeKind::RightFan, false);
        const int upper_right = b.add_edge(ends[i + 1], apex, t[i], EdgeKind::LeftFan, true);
        b.vertex(ends[i]).up_edges.push_back(upper_left);
        b.vertex(ends[i + 1]).up_edges.push_back(upper_right);
      }
    }
  }
  return f;
}

TreeView extract_tree(const Filter& filter) {
  TreeView view;
  view.vertex_count = static_cast<int>(filter.vertices.size());
  std::vector<std::vector<int>> adj(filter.vertices.size());
  for (std::size_t e = 0; e < filter.edges.size(); ++e) {
    const FilterEdge& edge = filter.edges[e];
    if (!edge.is_tree) continue;
    view.edges.push_back(static_cast<int>(e));
    adj[static_cast<std::size_t>(edge.lower)].push_back(edge.upper);
    adj[static_cast<std::size_t>(edge.upper)].push_back(edge.lower);
  }
  if (filter.vertices.empty()) {
    view.connected = view.acyclic = true;
    return view;
  }
  std::vector<char> seen(filter.vertices.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (seen[static_cast<std::size_t>(y)] != 0) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      ++reached;
      stack.push_back(y);
    }
  }
  view.connected = reached == filter.vertices.size();
  view.acyclic = view.connected && view.edges.size() + 1 == filter.vertices.size();
  return view;
}

FactReport verify_facts(const Filter& filter) {
  FactReport report;
  auto fail = [&](int fact, int vertex, int edge, std::string detail) {
    report.violations.push_back(FactViolation{fact, vertex, edge, std::move(detail)});
  };
  const auto& V = filter.vertices;
  const auto& E = filter.edges;
  auto edge = [&](int e) -> const FilterEdge& { return E[static_cast<std::size_t>(e)]; };
  auto vert = [&](int v) -> const FilterVertex& { return V[static_cast<std::size_t>(v)]; };
  const int top = filter.top();
  const int n = filter.prefix_length;

  // Planarity bookkeeping: consecutive levels and order-preserving edges.
  for (std::size_t e = 0; e < E.size(); ++e) {
    if (vert(E[e].upper).level != vert(E[e].lower).level + 1) {
      fail(0, E[e].lower, static_cast<int>(e), "edge skips a level");
    }
  }
  for (int level = 0; level < top; ++level) {
    int last = -1;
    for (int v : filter.levels[static_cast<std::size_t>(level)]) {
      for (int e : vert(v).up_edges) {
        const int p = vert(edge(e).upper).planar_index;
        if (p < last) fail(0, v, e, "up edges cross");
        last = p;
      }
    }
  }

  for (int level = 1; level <= top; ++level) {
    for (int v : filter.levels[static_cast<std::size_t>(level)]) {
      const auto& down = vert(v).down_edges;
      if (down.empty() || down.size() > 2) {
        fail(1, v, -1, std::to_string(down.size()) + " edges below");
        continue;
      }
      if (down.size() == 1) {
        const FilterEdge& d = edge(down[0]);
        if (d.kind != EdgeKind::Interior && !d.on_alpha && !d.on_beta) {
          fail(2, v, down[0], "single edge below is a " + to_string(d.kind) + " fan edge off alpha and beta");
        }
        continue;
      }
      const FilterEdge& d = edge(down[0]);
      const FilterEdge& e = edge(down[1]);
      if (e.kind != EdgeKind::LeftFan || d.kind != EdgeKind::RightFan) {
        fail(3, v, down[1], "double edges below are not (right fan, left fan)");
        continue;
      }
      if (d.fan == e.fan) fail(3, v, down[1], "both edges below belong to one fan");
      if (d.label == e.label) fail(3, v, down[1], "edges below carry the same label");
      bool loop = false;
      for (int x : vert(d.lower).down_edges) {
        for (int y : vert(e.lower).down_edges) {
          const FilterEdge& ex = edge(x);
          const FilterEdge& ey = edge(y);
          if (ex.fan >= 0 && ex.fan == ey.fan && ex.lower == ey.lower && ex.label == e.label &&
              ey.label == d.label) {
            loop = true;
          }
        }
      }
      if (!loop) fail(3, v, down[1], "edges below do not close a fan loop");
    }
  }

  for (int level = n; level < top; ++level) {
    for (int v : filter.levels[static_cast<std::size_t>(level)]) {
      const FilterVertex& x = vert(v);
      const auto& up = x.up_edges;
      if (x.fan < 0 || filter.fans[static_cast<std::size_t>(x.fan)].base_vertex != v) {
        fail(4, v, -1, "no fan based at vertex");
        continue;
      }
      bool one_fan = up.size() >= 3;
      for (std::size_t i = 0; i < up.size() && one_fan; ++i) {
        const FilterEdge& u = edge(up[i]);
        const EdgeKind want = i == 0 ? EdgeKind::LeftFan : i + 1 == up.size() ? EdgeKind::RightFan : EdgeKind::Interior;
        if (u.fan != x.fan || u.kind != want) one_fan = false;
      }
      if (!one_fan) fail(4, v, -1, "edges above are not one fan (left, interior..., right)");
      const bool has_interior = std::any_of(up.begin(), up.end(), [&](int e) {
        return edge(e).kind == EdgeKind::Interior && edge(e).is_tree;
      });
      if (!has_interior) fail(7, v, -1, "dead end in the tree");
    }
  }

  const TreeView tree = extract_tree(filter);
  if (!tree.connected || !tree.acyclic) fail(5, -1, -1, "tree edges do not form a spanning tree");
  for (std::size_t e = 0; e < E.size(); ++e) {
    const FilterEdge& x = E[e];
    if ((x.kind == EdgeKind::Interior || x.on_alpha || x.on_beta) && !x.is_tree) {
      fail(5, x.lower, static_cast<int>(e), "alpha, beta or interior edge is not a tree edge");
    }
    const bool expect_tree = !(x.kind == EdgeKind::RightFan && !x.on_beta);
    if (x.is_tree != expect_tree) {
      fail(6, x.lower, static_cast<int>(e), expect_tree ? "edge should be a tree edge" : "edge should be non-tree");
    }
  }
  auto follow = [&](const Word& ray, bool alpha_side) {
    int v = 0;
    for (int level = 0; level < top; ++level) {
      int next = -1;
      for (int e : vert(v).up_edges) {
        if ((alpha_side ? edge(e).on_alpha : edge(e).on_beta) && edge(e).label == ray[static_cast<std::size_t>(level)]) {
          next = edge(e).upper;
        }
      }
      if (next < 0) {
        fail(5, v, -1, std::string(alpha_side ? "alpha" : "beta") + " leaves the tree at level " +
                           std::to_string(level));
        return;
      }
      v = next;
    }
  };
  if (!V.empty()) {
    follow(filter.alpha, true);
    follow(filter.beta, false);
  }
  return report;
}

CayleyReport map_to_cayley(const Filter& filter) {
  CayleyReport report;
  const PresentationGraph& graph = filter.graph;
  std::vector<NormalForm> element(filter.vertices.size());
  for (std::size_t v = 0; v < filter.vertices.size(); ++v) {
    const int pe = filter.vertices[v].parent_edge;
    if (pe < 0) continue;
    const FilterEdge& e = filter.edges[static_cast<std::size_t>(pe)];
    element[v] = multiply(graph, element[static_cast<std::size_t>(e.lower)], e.label);
    if (element[v].length() != filter.vertices[v].level) {
      report.problems.push_back("vertex v" + std::to_string(filter.vertices[v].level) + "_" +
                                std::to_string(filter.vertices[v].planar_index) + " has length " +
                                std::to_string(element[v].length()));
    }
  }
  for (std::size_t i = 0; i < filter.edges.size(); ++i) {
    const FilterEdge& e = filter.edges[i];
    if (multiply(graph, element[static_cast<std::size_t>(e.lower)], e.label) !=
        element[static_cast<std::size_t>(e.upper)]) {
      report.problems.push_back("edge " + std::to_string(i) + " does not multiply by its label");
    }
  }
  report.elements.resize(filter.levels.size());
  for (std::size_t level = 0; level < filter.levels.size(); ++level) {
    for (int v : filter.levels[level]) report.elements[level].push_back(element[static_cast<std::size_t>(v)]);
  }
  return report;
}

namespace {

struct PathSearch {
  const Filter& filter;
  const FactorPairs& pairs;
  std::vector<std::vector<int>> steps;  // usable upward tree edges per vertex
  std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, int>> memo;

  PathSearch(const Filter& f, const FactorPairs& p) : filter(f), pairs(p), steps(f.vertices.size()) {
    for (std::size_t v = 0; v < f.vertices.size(); ++v) {
      for (int e : f.vertices[v].up_edges) {
        const FilterEdge& edge = f.edges[static_cast<std::size_t>(e)];
        const FilterVertex& up = f.vertices[static_cast<std::size_t>(edge.upper)];
        if (edge.is_tree && !up.on_alpha && !up.on_beta) steps[v].push_back(e);
      }
    }
  }

  const FilterEdge& edge(int e) const { return filter.edges[static_cast<std::size_t>(e)]; }

  int longest(int v, VertexSet letters) {
    auto& slot = memo[static_cast<std::uint64_t>(v)];
    if (auto it = slot.find(letters.bits()); it != slot.end()) return it->second;
    int best = 0;
    for (int e : steps[static_cast<std::size_t>(v)]) {
      VertexSet next = letters;
      next.insert(edge(e).label);
      if (pairs.coverable(next)) best = std::max(best, 1 + longest(edge(e).upper, next));
    }
    memo[static_cast<std::uint64_t>(v)][letters.bits()] = best;
    return best;
  }

  // Factor paths longer than |S| must be followed, within two steps, by a
  // letter they do not already use.
  std::uint64_t repeats(int v, VertexSet letters, int length) {
    std::uint64_t bad = 0;
    const int s = filter.graph.size();
    if (length > s) {
      for (int e1 : steps[static_cast<std::size_t>(v)]) {
        if (!letters.contains(edge(e1).label)) continue;
        for (int e2 : steps[static_cast<std::size_t>(edge(e1).upper)]) {
          if (letters.contains(edge(e2).label)) ++bad;
        }
      }
    }
    for (int e : steps[static_cast<std::size_t>(v)]) {
      VertexSet next = letters;
      next.insert(edge(e).label);
      if (pairs.coverable(next)) bad += repeats(edge(e).upper, next, length + 1);
    }
    return bad;
  }
};

}  // namespace

FactorBound check_factor_bound(const Filter& filter) {
  FactorBound out;
  out.bound = 3 * filter.graph.size();
  if (filter.vertices.empty()) return out;
  const FactorPairs pairs(filter.graph);
  if (pairs.empty()) return out;
  PathSearch search(filter, pairs);
  for (std::size_t v = 0; v < filter.vertices.size(); ++v) {
    out.max_length = std::max(out.max_length, search.longest(static_cast<int>(v), VertexSet{}));
    out.repeat_violations += search.repeats(static_cast<int>(v), VertexSet{}, 0);
  }
  out.pass = out.max_length <= out.bound;
  return out;
}

std::string export_dot(const Filter& filter, const DotOptions& options) {
  std::ostringstream out;
  auto name = [&](int v) {
    const FilterVertex& x = filter.vertices[static_cast<std::size_t>(v)];
    return "v" + std::to_string(x.level) + "_" + std::to_string(x.planar_index);
  };
  out << "digraph " << options.name << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=point];\n";
  for (std::size_t level = 0; level < filter.levels.size(); ++level) {
    out << "  { rank=same;";
    for (int v : filter.levels[level]) out << ' ' << name(v) << ';';
    out << " }\n";
  }
  if (options.show_elements) {
    for (const auto& row : filter.levels) {
      for (int v : row) {
        const NormalForm g = normal_form(filter.graph, filter.tree_word(v));
        out << "  " << name(v) << " [shape=plaintext, label=\"" << format_word(filter.graph, g.word()) << "\"];\n";
      }
    }
  }
  for (const FilterEdge& e : filter.edges) {
    out << "  " << name(e.lower) << " -> " << name(e.upper) << " [label=\"" << filter.graph.name(e.label) << '"';
    if (!e.is_tree) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace racg
