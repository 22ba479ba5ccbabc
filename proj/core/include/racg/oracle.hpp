#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "racg/graph.hpp"
#include "racg/word.hpp"

namespace racg {

inline constexpr std::size_t kDefaultElementCap = 10'000'000;

/// Brute-force Cayley ball. Elements are identified through the integer Tits
/// representation, so nothing here goes through the word engine. Each element
/// is keyed by the first word that reaches it in a shortlex breadth-first
/// sweep, i.e. its shortlex-least geodesic.
class Ball {
 public:
  using Matrix = std::vector<std::int64_t>;

  const PresentationGraph& graph() const { return graph_; }
  int radius() const { return radius_; }
  std::size_t size() const { return words_.size(); }

  /// Canonical words, shortlex sorted; index i has distance distances()[i].
  const std::vector<NormalForm>& elements() const { return words_; }
  const std::vector<int>& distances() const { return distances_; }
  /// Element counts at each distance 0..radius.
  std::vector<std::size_t> sphere_sizes() const;

  bool contains(const NormalForm& g) const { return index_.count(g) != 0; }
  /// Distance of a canonical word; RangeError if absent.
  int distance(const NormalForm& g) const;

  /// Evaluate an arbitrary word; nullopt if its element lies outside the ball.
  std::optional<std::size_t> locate(std::span<const Letter> w) const;
  std::optional<std::size_t> locate_matrix(const Matrix& m) const;
  /// Cayley length of the element a word represents; RangeError if outside.
  int length_of(std::span<const Letter> w) const;
  /// Canonical word of the element a word represents; RangeError if outside.
  const NormalForm& canonical(std::span<const Letter> w) const;

  Matrix matrix_of(std::span<const Letter> w) const;
  void right_multiply(Matrix& m, Letter s) const;

  friend Ball ball(const PresentationGraph& graph, int radius, std::size_t element_cap);

 private:
  struct MatrixHash {
    std::size_t operator()(const Matrix& m) const noexcept;
  };

  PresentationGraph graph_;
  int radius_ = 0;
  std::vector<NormalForm> words_;
  std::vector<int> distances_;
  std::unordered_map<NormalForm, std::size_t, NormalFormHash> index_;
  std::unordered_map<Matrix, std::size_t, MatrixHash> by_matrix_;
};

/// Throws InputError for a negative radius and ResourceError past the cap.
Ball ball(const PresentationGraph& graph, int radius, std::size_t element_cap = kDefaultElementCap);

/// d(g, h) = l(g^-1 h); RangeError when g^-1 h lies outside the ball.
int oracle_distance(const Ball& b, const NormalForm& g, const NormalForm& h);

/// Every geodesic word for g, sorted lexicographically. RangeError if g is outside.
std::vector<Word> all_geodesics(const Ball& b, const NormalForm& g);

}  // namespace racg
