#include "racg/word.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "racg/errors.hpp"

namespace racg {

std::size_t NormalFormHash::operator()(const NormalForm& g) const noexcept {
  // FNV-1a over the letters.
  std::size_t h = 1469598103934665603ULL;
  for (Letter c : g.word()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h ^ g.word().size();
}

void check_word(const PresentationGraph& graph, std::span<const Letter> w) {
  for (Letter c : w) {
    if (c >= graph.size()) throw InputError("letter index " + std::to_string(c) + " out of range");
  }
}

Word parse_word(const PresentationGraph& graph, std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) != 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j])) == 0) ++j;
    const std::string_view token = text.substr(i, j - i);
    if (token != "()") {
      const int idx = graph.index_of(token);
      if (idx < 0) {
        throw ParseError("unknown generator '" + std::string(token) + "'", 1, static_cast<int>(i) + 1);
      }
      out.push_back(static_cast<Letter>(idx));
    }
    i = j;
  }
  return out;
}

std::string format_word(const PresentationGraph& graph, std::span<const Letter> w) {
  if (w.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out += ' ';
    out += graph.name(w[i]);
  }
  return out;
}

Word reversed(std::span<const Letter> w) { return Word(w.rbegin(), w.rend()); }

namespace {

// Position of the letter that `s` cancels against when appended to the
// geodesic word `p`, or -1 if p.s stays geodesic.
long cancel_position(const PresentationGraph& graph, std::span<const Letter> p, Letter s) {
  const VertexSet commuting = graph.neighbors(s);
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k] == s) return static_cast<long>(k);
    if (!commuting.contains(p[k])) return -1;
  }
  return -1;
}

}  // namespace

std::optional<std::size_t> cancellation_partner(const PresentationGraph& graph, std::span<const Letter> geodesic,
                                                Letter s) {
  const long k = cancel_position(graph, geodesic, s);
  if (k < 0) return std::nullopt;
  return static_cast<std::size_t>(k);
}

bool extends_geodesic(const PresentationGraph& graph, std::span<const Letter> geodesic, Letter s) {
  return cancel_position(graph, geodesic, s) < 0;
}

Word reduce(const PresentationGraph& graph, std::span<const Letter> w) {
  check_word(graph, w);
  Word p;
  p.reserve(w.size());
  for (Letter s : w) {
    const long k = cancel_position(graph, p, s);
    if (k < 0) {
      p.push_back(s);
    } else {
      p.erase(p.begin() + k);
    }
  }
  return p;
}

bool is_geodesic(const PresentationGraph& graph, std::span<const Letter> w) {
  return reduce(graph, w).size() == w.size();
}

std::vector<Wall> walls(const PresentationGraph& graph, std::span<const Letter> w) {
  check_word(graph, w);
  std::vector<Wall> out;
  out.reserve(w.size());
  Word conj;
  for (std::size_t i = 0; i < w.size(); ++i) {
    conj.assign(w.begin(), w.begin() + static_cast<long>(i) + 1);
    conj.insert(conj.end(), w.rend() - static_cast<long>(i), w.rend());
    out.push_back(Wall{normal_form(graph, conj), w[i]});
  }
  return out;
}

bool walls_distinct(const std::vector<Wall>& ws) {
  std::unordered_set<NormalForm, NormalFormHash> seen;
  for (const auto& wall : ws) {
    if (!seen.insert(wall.reflection).second) return false;
  }
  return true;
}

NormalForm normal_form(const PresentationGraph& graph, std::span<const Letter> w) {
  Word rest = reduce(graph, w);
  Word out;
  out.reserve(rest.size());
  // Peel the least left descent: a letter whose first occurrence is preceded
  // only by letters it commutes with.
  while (!rest.empty()) {
    VertexSet before;
    int best = -1;
    std::size_t best_pos = 0;
    for (std::size_t p = 0; p < rest.size(); ++p) {
      const Letter x = rest[p];
      if (before.subset_of(graph.neighbors(x)) && (best < 0 || x < best)) {
        best = x;
        best_pos = p;
      }
      before.insert(x);
    }
    out.push_back(static_cast<Letter>(best));
    rest.erase(rest.begin() + static_cast<long>(best_pos));
  }
  return NormalForm::from_canonical(std::move(out));
}

NormalForm multiply(const PresentationGraph& graph, const NormalForm& g, const NormalForm& h) {
  Word w = g.word();
  w.insert(w.end(), h.word().begin(), h.word().end());
  return normal_form(graph, w);
}

NormalForm multiply(const PresentationGraph& graph, const NormalForm& g, Letter s) {
  Word w = g.word();
  w.push_back(s);
  return normal_form(graph, w);
}

NormalForm inverse(const PresentationGraph& graph, const NormalForm& g) {
  return normal_form(graph, reversed(g.word()));
}

NormalForm generator(Letter s) { return NormalForm::from_canonical(Word{s}); }

VertexSet descent_set(const PresentationGraph& graph, const NormalForm& g) {
  check_word(graph, g.word());
  VertexSet out;
  Word w = g.word();
  w.push_back(0);
  for (int s = 0; s < graph.size(); ++s) {
    w.back() = static_cast<Letter>(s);
    if (static_cast<int>(reduce(graph, w).size()) < g.length()) out.insert(s);
  }
  if (!is_clique(graph, out)) throw InternalError("descent set is not a clique");
  return out;
}

NormalForm project_to_coset(const PresentationGraph& graph, const NormalForm& v, VertexSet t) {
  graph.check_subset(t);
  NormalForm current = v;
  while (true) {
    const VertexSet shortening = descent_set(graph, current) & t;
    if (shortening.empty()) return current;
    current = multiply(graph, current, static_cast<Letter>(shortening.least()));
  }
}

Word extend_to_letter(const PresentationGraph& graph, std::span<const Letter> alpha, Letter v) {
  check_word(graph, alpha);
  if (v >= graph.size()) throw InputError("target letter out of range");
  if (!is_geodesic(graph, alpha)) throw InputError("extend_to_letter: alpha is not geodesic");
  if (join_factors(graph).size() != 1) {
    throw InputError("extend_to_letter: graph splits as a join (precondition)");
  }
  Word base(alpha.begin(), alpha.end());
  if (!base.empty() && base.back() == v) return base;

  const int cap = 4 * graph.size();
  std::vector<Word> level{base};
  std::unordered_set<NormalForm, NormalFormHash> seen{normal_form(graph, base)};
  for (int depth = 0; depth <= cap; ++depth) {
    for (const Word& w : level) {
      if (extends_geodesic(graph, w, v)) {
        Word out = w;
        out.push_back(v);
        return out;
      }
    }
    std::vector<Word> next;
    for (const Word& w : level) {
      for (int x = 0; x < graph.size(); ++x) {
        if (!extends_geodesic(graph, w, static_cast<Letter>(x))) continue;
        Word ext = w;
        ext.push_back(static_cast<Letter>(x));
        if (seen.insert(normal_form(graph, ext)).second) next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
  throw InternalError("extend_to_letter: no extension within " + std::to_string(cap) + " letters");
}

FactorPairs::FactorPairs(const PresentationGraph& graph) {
  struct Raw {
    VertexSet x, y;
  };
  std::vector<Raw> raw;
  // X holds the least member of X u Y; Y ranges over non-clique subsets of lk(X) above it.
  for (const VertexSet x : subsets_size_lex(graph.all())) {
    if (x.size() < 2 || is_clique(graph, x)) continue;
    const VertexSet room = link(graph, x) - VertexSet::range(x.least() + 1);
    if (room.size() < 2) continue;
    for (const VertexSet y : subsets_size_lex(room)) {
      if (y.size() < 2 || is_clique(graph, y)) continue;
      raw.push_back({x, y});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& p, const Raw& q) {
    const VertexSet up = p.x | p.y, uq = q.x | q.y;
    if (up != uq) return size_lex_less(up, uq);
    return size_lex_less(p.x, q.x);
  });
  for (const Raw& r : raw) {
    const VertexSet u = r.x | r.y;
    if (groups_.empty() || groups_.back().members != u) groups_.push_back(Group{u, {}});
    groups_.back().splits.push_back(FactorPair{r.x, r.y});
  }
}

std::optional<FactorPair> FactorPairs::cover(VertexSet letters) const {
  if (letters.empty()) throw InputError("factor_cover of an empty letter set");
  const int first = letters.least();
  for (const Group& g : groups_) {
    if (!letters.subset_of(g.members)) continue;
    std::optional<FactorPair> best;
    for (const FactorPair& p : g.splits) {
      const FactorPair oriented = p.a.contains(first) ? p : FactorPair{p.b, p.a};
      if (!best || lex_less(oriented.a, best->a)) best = oriented;
    }
    return best;
  }
  return std::nullopt;
}

bool FactorPairs::coverable(VertexSet letters) const {
  if (letters.empty()) return !groups_.empty();
  return std::any_of(groups_.begin(), groups_.end(),
                     [&](const Group& g) { return letters.subset_of(g.members); });
}

std::optional<FactorPair> factor_cover(const PresentationGraph& graph, VertexSet letters) {
  graph.check_subset(letters);
  if (letters.empty()) throw InputError("factor_cover of an empty letter set");
  return FactorPairs(graph).cover(letters);
}

VertexSet letters_of(std::span<const Letter> w) {
  VertexSet out;
  for (Letter c : w) out.insert(c);
  return out;
}

std::size_t longest_terminal_factor_suffix(const PresentationGraph& graph, const FactorPairs& pairs,
                                           std::span<const Letter> w) {
  if (!is_geodesic(graph, w)) throw InputError("longest_terminal_factor_suffix: word is not geodesic");
  std::size_t start = w.size();
  VertexSet letters;
  while (start > 0) {
    letters.insert(w[start - 1]);
    if (!pairs.coverable(letters)) break;
    --start;
  }
  return start;
}

std::size_t longest_terminal_factor_suffix(const PresentationGraph& graph, std::span<const Letter> w) {
  return longest_terminal_factor_suffix(graph, FactorPairs(graph), w);
}

}  // namespace racg
