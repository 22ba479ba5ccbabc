#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

/// A word in the generators; letters are generator indices.
using Word = std::vector<Letter>;

/// Shortlex-least geodesic word of a group element. Only the word engine
/// (and the oracle, which derives it independently) constructs these.
class NormalForm {
 public:
  NormalForm() = default;  // identity

  /// For callers that already hold a canonical word (tests, oracle tables).
  static NormalForm from_canonical(Word w) { return NormalForm(std::move(w)); }

  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  /// Shortlex order.
  friend std::strong_ordering operator<=>(const NormalForm& a, const NormalForm& b) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() <=> b.word_.size();
    return a.word_ <=> b.word_;
  }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  explicit NormalForm(Word w) : word_(std::move(w)) {}
  Word word_;
};

struct NormalFormHash {
  std::size_t operator()(const NormalForm& g) const noexcept;
};

/// The wall crossed at one step of an edge path.
struct Wall {
  NormalForm reflection;  // w s w^-1
  Letter letter;
  friend bool operator==(const Wall&, const Wall&) = default;
};

/// Throws InputError if any letter is not a generator of `graph`.
void check_word(const PresentationGraph& graph, std::span<const Letter> w);

/// Whitespace-separated generator names; "" or "()" is the identity.
Word parse_word(const PresentationGraph& graph, std::string_view text);
/// Inverse of parse_word; the identity prints as "()".
std::string format_word(const PresentationGraph& graph, std::span<const Letter> w);

Word reversed(std::span<const Letter> w);

/// Index of the letter that `s` cancels against when appended to the geodesic
/// word `geodesic`: the rightmost copy of `s`, provided `s` commutes with
/// every later letter. nullopt when the extension stays geodesic.
std::optional<std::size_t> cancellation_partner(const PresentationGraph& graph, std::span<const Letter> geodesic,
                                                Letter s);

/// True iff appending `s` to the geodesic word `geodesic` stays geodesic.
bool extends_geodesic(const PresentationGraph& graph, std::span<const Letter> geodesic, Letter s);

/// Geodesic word for the same element. Letters are appended left to right;
/// a letter that would make the prefix non-geodesic cancels the rightmost
/// earlier copy of itself (which commutes with everything after it).
Word reduce(const PresentationGraph& graph, std::span<const Letter> w);

bool is_geodesic(const PresentationGraph& graph, std::span<const Letter> w);

/// Walls crossed by the path, in order. The path is geodesic iff the
/// reflections are pairwise distinct.
std::vector<Wall> walls(const PresentationGraph& graph, std::span<const Letter> w);
bool walls_distinct(const std::vector<Wall>& ws);

NormalForm normal_form(const PresentationGraph& graph, std::span<const Letter> w);
NormalForm multiply(const PresentationGraph& graph, const NormalForm& g, const NormalForm& h);
NormalForm multiply(const PresentationGraph& graph, const NormalForm& g, Letter s);
NormalForm inverse(const PresentationGraph& graph, const NormalForm& g);
NormalForm generator(Letter s);

/// B(g): letters s with l(gs) = l(g) - 1. Always a clique; InternalError otherwise.
VertexSet descent_set(const PresentationGraph& graph, const NormalForm& g);

/// Unique shortest element of the coset v<T>.
NormalForm project_to_coset(const PresentationGraph& graph, const NormalForm& v, VertexSet t);

/// Shortest geodesic extension of `alpha` ending in `v` (ties broken
/// lexicographically). Requires a join-irreducible graph. The search depth is
/// capped at 4|S|; hitting the cap raises InternalError.
Word extend_to_letter(const PresentationGraph& graph, std::span<const Letter> alpha, Letter v);

/// Disjoint A, B with A fully adjacent to B and neither a clique.
struct FactorPair {
  VertexSet a;
  VertexSet b;
  VertexSet both() const { return a | b; }
  friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

/// Every infinite visual product A * B of the graph, grouped by A u B in
/// size-then-lex order. Built once per graph; cover queries are cheap.
class FactorPairs {
 public:
  explicit FactorPairs(const PresentationGraph& graph);

  /// First pair (by |A u B|, then A u B lexicographically) whose union
  /// contains `letters`. A is the side holding the least member of
  /// `letters`; among splits of the same union the lex-least such A wins.
  std::optional<FactorPair> cover(VertexSet letters) const;
  bool coverable(VertexSet letters) const;
  bool empty() const { return groups_.empty(); }

  struct Group {
    VertexSet members;
    std::vector<FactorPair> splits;  // a holds least(members)
  };
  const std::vector<Group>& groups() const { return groups_; }

 private:
  std::vector<Group> groups_;
};

/// Throws InputError for an empty `letters`.
std::optional<FactorPair> factor_cover(const PresentationGraph& graph, VertexSet letters);

VertexSet letters_of(std::span<const Letter> w);

/// 0-based start of the longest terminal subword whose letters admit a
/// factor cover; w.size() when no nonempty suffix qualifies.
std::size_t longest_terminal_factor_suffix(const PresentationGraph& graph, std::span<const Letter> w);
std::size_t longest_terminal_factor_suffix(const PresentationGraph& graph, const FactorPairs& pairs,
                                           std::span<const Letter> w);

}  // namespace racg
