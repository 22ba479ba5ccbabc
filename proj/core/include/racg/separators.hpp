#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

/// C = A u B separates, A and B are disjoint, fully adjacent and neither is a clique.
struct ProductSeparator {
  VertexSet a;
  VertexSet b;
  friend bool operator==(const ProductSeparator&, const ProductSeparator&) = default;
};

/// Virtual factor separator (C, C1, K).
struct Vfs {
  VertexSet c;
  VertexSet c1;
  VertexSet k;
  bool suspended = false;
  friend bool operator==(const Vfs&, const Vfs&) = default;
};

struct SeparatingClique {
  VertexSet q;
  friend bool operator==(const SeparatingClique&, const SeparatingClique&) = default;
};

struct JoinSplit {
  std::vector<VertexSet> factors;
  friend bool operator==(const JoinSplit&, const JoinSplit&) = default;
};

using SeparatorCertificate = std::variant<ProductSeparator, Vfs, SeparatingClique, JoinSplit>;

std::string certificate_kind(const SeparatorCertificate& cert);

/// Re-check a certificate against `within` (the full subgraph it was issued
/// for). Returns an empty string when valid, otherwise what failed.
std::string certificate_problem(const PresentationGraph& graph, VertexSet within,
                                const SeparatorCertificate& cert);

enum class EndsClass { Zero, Two, One, Infinite };
std::string to_string(EndsClass e);

/// Whether <C1> has finite index in <C>. Throws InputError unless C1 is in C.
bool finite_index_special(const PresentationGraph& graph, VertexSet c, VertexSet c1);

/// S = C u {s, t} with s, t non-adjacent and both adjacent to all of C.
bool is_suspended(const PresentationGraph& graph, VertexSet c);

std::optional<ProductSeparator> find_product_separator(const PresentationGraph& graph);

/// Canonical VFS; a non-suspended witness is returned whenever one exists.
std::optional<Vfs> find_vfs(const PresentationGraph& graph);

/// Least x whose link sits inside an infinite visual product. Requires no
/// product separator and a join-irreducible graph (InputError otherwise).
std::optional<int> has_vfs_via_link_criterion(const PresentationGraph& graph);

/// Every suspended separator C, in size-then-lex order.
std::vector<VertexSet> suspended_separators(const PresentationGraph& graph);

/// Least clique (size-then-lex, the empty set included) that separates the
/// full subgraph on `within`.
std::optional<VertexSet> find_separating_clique(const PresentationGraph& graph, VertexSet within);

/// Members of `within` not forming singleton join factors of it.
VertexSet strip_clique_factors(const PresentationGraph& graph, VertexSet within);

EndsClass ends(const PresentationGraph& graph);

}  // namespace racg
