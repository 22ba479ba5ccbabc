#include "racg/separators.hpp"

#include "racg/errors.hpp"
#include "racg/word.hpp"

namespace racg {

std::string certificate_kind(const SeparatorCertificate& cert) {
  struct Visitor {
    std::string operator()(const ProductSeparator&) const { return "ProductSeparator"; }
    std::string operator()(const Vfs&) const { return "Vfs"; }
    std::string operator()(const SeparatingClique&) const { return "SeparatingClique"; }
    std::string operator()(const JoinSplit&) const { return "JoinSplit"; }
  };
  return std::visit(Visitor{}, cert);
}

std::string to_string(EndsClass e) {
  switch (e) {
    case EndsClass::Zero: return "Zero";
    case EndsClass::Two: return "Two";
    case EndsClass::One: return "One";
    case EndsClass::Infinite: return "Infinite";
  }
  return "?";
}

bool finite_index_special(const PresentationGraph& graph, VertexSet c, VertexSet c1) {
  graph.check_subset(c);
  if (!c1.subset_of(c)) throw InputError("finite_index_special: C1 is not contained in C");
  // F: members of C1 adjacent to the rest of C1 (the finite join factor).
  VertexSet f;
  c1.for_each([&](int v) {
    if ((c1 - VertexSet::single(v)).subset_of(graph.neighbors(v))) f.insert(v);
  });
  const VertexSet outside = c - c1;
  if (!is_clique(graph, outside | f)) return false;
  const VertexSet infinite_part = c1 - f;
  bool ok = true;
  outside.for_each([&](int v) {
    if (!infinite_part.subset_of(graph.neighbors(v))) ok = false;
  });
  return ok;
}

bool is_suspended(const PresentationGraph& graph, VertexSet c) {
  graph.check_subset(c);
  const VertexSet rest = graph.all() - c;
  if (rest.size() != 2) return false;
  const std::vector<int> st = rest.members();
  if (graph.adjacent(st[0], st[1])) return false;
  return c.subset_of(graph.neighbors(st[0])) && c.subset_of(graph.neighbors(st[1]));
}

std::optional<ProductSeparator> find_product_separator(const PresentationGraph& graph) {
  for (const VertexSet u : subsets_size_lex(graph.all())) {
    if (u.size() < 4) continue;
    if (!separates(graph, u).separates) continue;
    const int first = u.least();
    for (const VertexSet a : subsets_size_lex(u)) {
      if (!a.contains(first) || a == u) continue;
      const VertexSet b = u - a;
      if (a.size() < 2 || b.size() < 2) continue;
      if (!b.subset_of(link(graph, a))) continue;
      if (is_clique(graph, a) || is_clique(graph, b)) continue;
      return ProductSeparator{a, b};
    }
  }
  return std::nullopt;
}

namespace {

// Least non-adjacent pair inside `s`, or empty if `s` is a clique.
VertexSet least_non_edge(const PresentationGraph& graph, VertexSet s) {
  const std::vector<int> m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!graph.adjacent(m[i], m[j])) return VertexSet{m[i], m[j]};
    }
  }
  return {};
}

}  // namespace

std::optional<Vfs> find_vfs(const PresentationGraph& graph) {
  std::optional<Vfs> suspended_hit;
  for (const VertexSet c : subsets_size_lex(graph.all())) {
    if (!separates(graph, c).separates) continue;
    const bool suspended = is_suspended(graph, c);
    if (suspended && suspended_hit) continue;
    for (const VertexSet c1 : subsets_size_lex(c)) {
      if (!finite_index_special(graph, c, c1)) continue;
      const VertexSet k = least_non_edge(graph, link(graph, c1));
      if (k.empty()) continue;
      Vfs hit{c, c1, k, suspended};
      if (!suspended) return hit;
      suspended_hit = hit;
      break;
    }
  }
  return suspended_hit;
}

std::optional<int> has_vfs_via_link_criterion(const PresentationGraph& graph) {
  if (graph.size() == 0 || join_factors(graph).size() != 1) {
    throw InputError("link criterion requires a join-irreducible graph");
  }
  if (find_product_separator(graph)) throw InputError("link criterion requires no product separator");
  const FactorPairs pairs(graph);
  for (int x = 0; x < graph.size(); ++x) {
    const VertexSet l = link(graph, VertexSet::single(x));
    if (pairs.coverable(l)) return x;
  }
  return std::nullopt;
}

std::vector<VertexSet> suspended_separators(const PresentationGraph& graph) {
  std::vector<VertexSet> out;
  for (const VertexSet c : subsets_size_lex(graph.all())) {
    if (c.size() + 2 == graph.size() && is_suspended(graph, c)) out.push_back(c);
  }
  return out;
}

std::optional<VertexSet> find_separating_clique(const PresentationGraph& graph, VertexSet within) {
  graph.check_subset(within);
  for (const VertexSet q : subsets_size_lex(within)) {
    if (!is_clique(graph, q)) continue;
    if (components_of(graph, within - q).size() >= 2) return q;
  }
  return std::nullopt;
}

VertexSet strip_clique_factors(const PresentationGraph& graph, VertexSet within) {
  VertexSet rest;
  for (const VertexSet f : join_factors_within(graph, within)) {
    if (f.size() > 1) rest |= f;
  }
  return rest;
}

EndsClass ends(const PresentationGraph& graph) {
  if (graph.size() == 0) throw InputError("ends of an empty graph");
  if (is_clique(graph, graph.all())) return EndsClass::Zero;
  const VertexSet rest = strip_clique_factors(graph, graph.all());
  if (rest.size() == 2) return EndsClass::Two;  // a non-edge, as the factor is not a clique
  if (find_separating_clique(graph, rest)) return EndsClass::Infinite;
  return EndsClass::One;
}

std::string certificate_problem(const PresentationGraph& graph, VertexSet within,
                                const SeparatorCertificate& cert) {
  graph.check_subset(within);
  if (within.empty()) return "empty subgraph";
  const PresentationGraph sub = induced(graph, within);
  auto local = [&](VertexSet s) { return restrict_to(s, within); };
  auto inside = [&](VertexSet s) { return s.subset_of(within); };

  if (const auto* p = std::get_if<ProductSeparator>(&cert)) {
    if (!inside(p->a) || !inside(p->b)) return "product separator leaves the subgraph";
    const VertexSet a = local(p->a), b = local(p->b);
    if (a.intersects(b)) return "A and B intersect";
    if (!b.subset_of(link(sub, a))) return "A and B are not fully adjacent";
    if (is_clique(sub, a) || is_clique(sub, b)) return "a product factor is a clique";
    if (!separates(sub, a | b).separates) return "A u B does not separate";
    return {};
  }
  if (const auto* v = std::get_if<Vfs>(&cert)) {
    if (!inside(v->c) || !inside(v->k)) return "VFS leaves the subgraph";
    const VertexSet c = local(v->c), c1 = local(v->c1), k = local(v->k);
    if (!v->c1.subset_of(v->c)) return "C1 is not contained in C";
    if (!separates(sub, c).separates) return "C does not separate";
    if (!finite_index_special(sub, c, c1)) return "<C1> does not have finite index in <C>";
    if (!k.subset_of(link(sub, c1))) return "K is not inside lk(C1)";
    if (is_clique(sub, k)) return "K is a clique";
    if (v->suspended != is_suspended(sub, c)) return "suspended flag is wrong";
    return {};
  }
  if (const auto* q = std::get_if<SeparatingClique>(&cert)) {
    if (!inside(q->q)) return "clique leaves the subgraph";
    const VertexSet c = local(q->q);
    if (!is_clique(sub, c)) return "Q is not a clique";
    if (!separates(sub, c).separates) return "Q does not separate";
    return {};
  }
  const auto& j = std::get<JoinSplit>(cert);
  std::vector<VertexSet> mapped;
  for (VertexSet f : j.factors) {
    if (!inside(f)) return "join factor leaves the subgraph";
    mapped.push_back(local(f));
  }
  if (mapped != join_factors(sub)) return "factors are not the maximal join decomposition";
  if (mapped.size() < 2) return "join split is trivial";
  return {};
}

}  // namespace racg
