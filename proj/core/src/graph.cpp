#include "racg/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "racg/errors.hpp"

namespace racg {

std::vector<VertexSet> subsets_size_lex(VertexSet universe) {
  const std::vector<int> members = universe.members();
  const int n = static_cast<int>(members.size());
  if (n > 24) throw ResourceError("subset enumeration over more than 24 generators");
  std::vector<VertexSet> out;
  out.reserve(std::size_t{1} << n);
  // Combinations of each size are generated in lexicographic order directly.
  std::vector<int> pick;
  for (int k = 0; k <= n; ++k) {
    pick.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      VertexSet s;
      for (int i : pick) s.insert(members[static_cast<std::size_t>(i)]);
      out.push_back(s);
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

namespace {

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

}  // namespace

PresentationGraph::PresentationGraph(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > static_cast<std::size_t>(kMaxGenerators)) {
    throw InputError("at most " + std::to_string(kMaxGenerators) + " generators are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw InputError("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw InputError("duplicate generator '" + n + "'");
  }
  adjacency_.assign(names_.size(), VertexSet{});
}

void PresentationGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= size() || v >= size()) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("self-loop on '" + name(u) + "'");
  adjacency_[static_cast<std::size_t>(u)].insert(v);
  adjacency_[static_cast<std::size_t>(v)].insert(u);
}

int PresentationGraph::index_of(std::string_view n) const {
  for (int i = 0; i < size(); ++i) {
    if (names_[static_cast<std::size_t>(i)] == n) return i;
  }
  return -1;
}

int PresentationGraph::edge_count() const {
  int twice = 0;
  for (const auto& a : adjacency_) twice += a.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> PresentationGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u) {
    neighbors(u).for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

void PresentationGraph::check_subset(VertexSet a) const {
  if (!a.subset_of(all())) throw InputError("vertex index out of range");
}

VertexSet link(const PresentationGraph& graph, VertexSet a) {
  graph.check_subset(a);
  VertexSet out = graph.all();
  a.for_each([&](int v) { out &= graph.neighbors(v); });
  return out;
}

bool is_clique(const PresentationGraph& graph, VertexSet a) {
  graph.check_subset(a);
  bool ok = true;
  a.for_each([&](int v) {
    if (!(a - VertexSet::single(v)).subset_of(graph.neighbors(v))) ok = false;
  });
  return ok;
}

std::vector<VertexSet> components_of(const PresentationGraph& graph, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.least());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int v) { next |= graph.neighbors(v); });
      next = (next & within) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

Separation separates(const PresentationGraph& graph, VertexSet c) {
  graph.check_subset(c);
  Separation s;
  s.components = components_of(graph, graph.all() - c);
  s.separates = s.components.size() >= 2;
  return s;
}

std::vector<VertexSet> join_factors_within(const PresentationGraph& graph, VertexSet within) {
  graph.check_subset(within);
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.least());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int v) { next |= (within - graph.neighbors(v)); });
      next = next - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

std::vector<VertexSet> join_factors(const PresentationGraph& graph) {
  if (graph.size() == 0) throw InputError("join_factors of an empty graph");
  return join_factors_within(graph, graph.all());
}

PresentationGraph induced(const PresentationGraph& graph, VertexSet a) {
  graph.check_subset(a);
  if (a.empty()) throw InputError("induced subgraph on the empty set");
  const std::vector<int> members = a.members();
  std::vector<std::string> names;
  names.reserve(members.size());
  for (int m : members) names.push_back(graph.name(m));
  PresentationGraph sub(std::move(names));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (graph.adjacent(members[i], members[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return sub;
}

VertexSet lift(VertexSet sub, VertexSet within) {
  const std::vector<int> members = within.members();
  VertexSet out;
  sub.for_each([&](int i) { out.insert(members.at(static_cast<std::size_t>(i))); });
  return out;
}

VertexSet restrict_to(VertexSet parent, VertexSet within) {
  VertexSet out;
  int pos = 0;
  within.for_each([&](int v) {
    if (parent.contains(v)) out.insert(pos);
    ++pos;
  });
  return out;
}

PresentationGraph permuted(const PresentationGraph& graph, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != graph.size()) throw InputError("permutation size mismatch");
  std::vector<std::string> names;
  for (int v : order) names.push_back(graph.name(v));
  PresentationGraph out(std::move(names));
  for (int i = 0; i < graph.size(); ++i) {
    for (int j = i + 1; j < graph.size(); ++j) {
      if (graph.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)])) out.add_edge(i, j);
    }
  }
  return out;
}

}  // namespace racg
