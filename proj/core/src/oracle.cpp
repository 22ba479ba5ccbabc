#include "racg/oracle.hpp"

#include <algorithm>
#include <string>

#include "racg/errors.hpp"

namespace racg {

std::size_t Ball::MatrixHash::operator()(const Matrix& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::int64_t x : m) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// Geometric representation: sigma_s fixes e_t for t != s except along e_s,
// with row s = (-1 at s, +2 where s and t do not commute, 0 elsewhere).
// Right multiplication by sigma_s only rewrites column-wise through M[i][s].
void Ball::right_multiply(Matrix& m, Letter s) const {
  const int n = graph_.size();
  const VertexSet commuting = graph_.neighbors(s);
  for (int i = 0; i < n; ++i) {
    std::int64_t* row = m.data() + static_cast<std::ptrdiff_t>(i) * n;
    const std::int64_t ms = row[s];
    if (ms == 0) continue;
    row[s] = -ms;
    for (int j = 0; j < n; ++j) {
      if (j == s || commuting.contains(j)) continue;
      if (__builtin_add_overflow(row[j], 2 * ms, &row[j])) {
        throw ResourceError("Tits representation entry overflow");
      }
    }
  }
}

Ball::Matrix Ball::matrix_of(std::span<const Letter> w) const {
  const int n = graph_.size();
  Matrix m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
  for (Letter s : w) {
    if (s >= n) throw InputError("letter out of range");
    right_multiply(m, s);
  }
  return m;
}

std::vector<std::size_t> Ball::sphere_sizes() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(radius_) + 1, 0);
  for (int d : distances_) ++out[static_cast<std::size_t>(d)];
  return out;
}

int Ball::distance(const NormalForm& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw RangeError("element not in the oracle ball");
  return distances_[it->second];
}

std::optional<std::size_t> Ball::locate_matrix(const Matrix& m) const {
  auto it = by_matrix_.find(m);
  if (it == by_matrix_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Ball::locate(std::span<const Letter> w) const { return locate_matrix(matrix_of(w)); }

int Ball::length_of(std::span<const Letter> w) const {
  auto idx = locate(w);
  if (!idx) throw RangeError("word leaves the oracle ball");
  return distances_[*idx];
}

const NormalForm& Ball::canonical(std::span<const Letter> w) const {
  auto idx = locate(w);
  if (!idx) throw RangeError("word leaves the oracle ball");
  return words_[*idx];
}

Ball ball(const PresentationGraph& graph, int radius, std::size_t element_cap) {
  if (radius < 0) throw InputError("ball radius must be nonnegative");
  Ball b;
  b.graph_ = graph;
  b.radius_ = radius;

  struct Node {
    Word word;
    Ball::Matrix matrix;
  };
  auto admit = [&](Node node, int d) {
    if (b.words_.size() >= element_cap) {
      throw ResourceError("oracle ball exceeds element cap of " + std::to_string(element_cap));
    }
    const std::size_t idx = b.words_.size();
    b.by_matrix_.emplace(std::move(node.matrix), idx);
    NormalForm key = NormalForm::from_canonical(std::move(node.word));
    b.index_.emplace(key, idx);
    b.words_.push_back(std::move(key));
    b.distances_.push_back(d);
  };

  Node identity{{}, b.matrix_of({})};
  std::vector<std::size_t> frontier{0};
  admit(identity, 0);
  // Frontier entries are processed in lex order of their words and letters
  // ascend, so the first word to reach an element is its shortlex-least one.
  for (int d = 1; d <= radius; ++d) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      const Word base = b.words_[idx].word();
      const Ball::Matrix base_matrix = b.matrix_of(base);
      for (int s = 0; s < graph.size(); ++s) {
        Ball::Matrix m = base_matrix;
        b.right_multiply(m, static_cast<Letter>(s));
        if (b.by_matrix_.count(m) != 0) continue;
        Word w = base;
        w.push_back(static_cast<Letter>(s));
        next.push_back(b.words_.size());
        admit(Node{std::move(w), std::move(m)}, d);
      }
    }
    frontier = std::move(next);
  }
  return b;
}

int oracle_distance(const Ball& b, const NormalForm& g, const NormalForm& h) {
  Word w = reversed(g.word());
  w.insert(w.end(), h.word().begin(), h.word().end());
  return b.length_of(w);
}

std::vector<Word> all_geodesics(const Ball& b, const NormalForm& g) {
  const auto start = b.locate(g.word());
  if (!start) throw RangeError("element not in the oracle ball");
  std::vector<Word> out;
  Word suffix;
  // Walk back toward the identity one descent at a time.
  auto walk = [&](auto&& self, const Ball::Matrix& m, int d) -> void {
    if (d == 0) {
      out.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (int s = 0; s < b.graph().size(); ++s) {
      Ball::Matrix next = m;
      b.right_multiply(next, static_cast<Letter>(s));
      auto it = b.locate_matrix(next);
      if (!it || b.distances()[*it] != d - 1) continue;
      suffix.push_back(static_cast<Letter>(s));
      self(self, next, d - 1);
      suffix.pop_back();
    }
  };
  walk(walk, b.matrix_of(g.word()), b.distances()[*start]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace racg
