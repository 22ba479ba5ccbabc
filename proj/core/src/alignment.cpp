#include "racg/alignment.hpp"

#include <algorithm>
#include <limits>

#include "racg/errors.hpp"

namespace racg {

namespace {

int common_prefix(const Word& x, const Word& y) {
  const auto [ix, iy] = std::mismatch(x.begin(), x.end(), y.begin(), y.end());
  return static_cast<int>(ix - x.begin());
}

AlignmentResult align_step(const PresentationGraph& graph, const Word& alpha, const NormalForm& h) {
  const NormalForm g = normal_form(graph, alpha);
  const NormalForm step = multiply(graph, inverse(graph, g), h);
  if (step.is_identity()) return AlignmentResult{alpha, alpha, static_cast<int>(alpha.size())};

  const Letter s1 = step.word().front();
  AlignmentResult out;
  if (const auto pos = cancellation_partner(graph, alpha, s1)) {
    // l(g s1) = l(g) - 1: alpha = u s1 v with s1 commuting with v; recurse on u v.
    Word shorter = alpha;
    shorter.erase(shorter.begin() + static_cast<long>(*pos));
    AlignmentResult inner = align_step(graph, shorter, h);
    out.alpha_prime = std::move(inner.alpha_prime);
    out.alpha_prime.push_back(s1);
    out.beta_prime = std::move(inner.beta_prime);
  } else {
    // l(g s1) = l(g) + 1: recurse on (alpha, s1), then cancel the s1 pair.
    Word longer = alpha;
    longer.push_back(s1);
    AlignmentResult inner = align_step(graph, longer, h);
    const auto cut = cancellation_partner(graph, inner.alpha_prime, s1);
    if (!cut) throw InternalError("align: (alpha'_1, s1) unexpectedly geodesic");
    out.alpha_prime = inner.alpha_prime;
    out.alpha_prime.erase(out.alpha_prime.begin() + static_cast<long>(*cut));
    out.beta_prime = std::move(inner.beta_prime);
    const std::size_t shared = static_cast<std::size_t>(inner.common_prefix_length);
    if (shared > *cut) {
      // beta'_1 = u s1 w ... with s1 w = w s1: slide s1 past w.
      auto first = out.beta_prime.begin() + static_cast<long>(*cut);
      std::rotate(first, first + 1, out.beta_prime.begin() + static_cast<long>(shared));
    }
  }
  out.common_prefix_length = common_prefix(out.alpha_prime, out.beta_prime);
  return out;
}

}  // namespace

AlignmentResult align(const PresentationGraph& graph, std::span<const Letter> alpha, const NormalForm& h) {
  check_word(graph, alpha);
  check_word(graph, h.word());
  if (!is_geodesic(graph, alpha)) throw InputError("align: alpha is not geodesic");
  return align_step(graph, Word(alpha.begin(), alpha.end()), h);
}

std::optional<Subpath> find_factor_subpath(const PresentationGraph& graph, const FactorPairs& pairs,
                                           std::span<const Letter> w, int k) {
  if (k < 1) throw InputError("find_factor_subpath: k must be positive");
  if (!is_geodesic(graph, w)) throw InputError("find_factor_subpath: word is not geodesic");
  const std::size_t len = static_cast<std::size_t>(k);
  if (w.size() < len) return std::nullopt;
  for (std::size_t start = 0; start + len <= w.size(); ++start) {
    VertexSet letters = letters_of(w.subspan(start, len));
    if (!pairs.coverable(letters)) continue;
    std::size_t end = start + len;
    while (end < w.size()) {
      letters.insert(w[end]);
      if (!pairs.coverable(letters)) break;
      ++end;
    }
    return Subpath{start, end};
  }
  return std::nullopt;
}

std::optional<Subpath> find_factor_subpath(const PresentationGraph& graph, std::span<const Letter> w, int k) {
  return find_factor_subpath(graph, FactorPairs(graph), w, k);
}

std::uint64_t divergence_threshold(int generators, int k) {
  using Wide = unsigned __int128;
  constexpr Wide cap = std::numeric_limits<std::uint64_t>::max();
  if (generators >= 64) return std::numeric_limits<std::uint64_t>::max();
  const Wide s = static_cast<Wide>(generators);
  Wide value = s * s;
  value *= Wide{1} << generators;
  if (value > cap) return std::numeric_limits<std::uint64_t>::max();
  value = value * static_cast<Wide>(k) + 2 * s;
  return value > cap ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(value);
}

DivergenceReport divergence_bound_check(const PresentationGraph& graph, std::span<const Letter> alpha,
                                        std::span<const Letter> beta, int n, int k,
                                        std::optional<std::uint64_t> threshold) {
  check_word(graph, alpha);
  check_word(graph, beta);
  if (!is_geodesic(graph, alpha) || !is_geodesic(graph, beta)) {
    throw InputError("divergence_bound_check: inputs must be geodesic");
  }
  if (normal_form(graph, alpha) != normal_form(graph, beta)) {
    throw InputError("divergence_bound_check: endpoints differ");
  }
  if (n < 0 || static_cast<std::size_t>(n) > std::min(alpha.size(), beta.size())) {
    throw InputError("divergence_bound_check: n out of range");
  }
  const std::size_t cut = static_cast<std::size_t>(n);
  Word between = reversed(alpha.first(cut));
  between.insert(between.end(), beta.begin(), beta.begin() + static_cast<long>(cut));

  DivergenceReport r;
  r.distance = normal_form(graph, between).length();
  r.threshold = threshold.value_or(divergence_threshold(graph.size(), k));
  r.triggered = static_cast<std::uint64_t>(r.distance) >= r.threshold;

  const FactorPairs pairs(graph);
  r.alpha_initial_has_factor = find_factor_subpath(graph, pairs, alpha.first(cut), k).has_value();
  r.alpha_terminal_has_factor = find_factor_subpath(graph, pairs, alpha.subspan(cut), k).has_value();
  r.beta_initial_has_factor = find_factor_subpath(graph, pairs, beta.first(cut), k).has_value();
  r.beta_terminal_has_factor = find_factor_subpath(graph, pairs, beta.subspan(cut), k).has_value();
  r.counterexample = r.triggered && !(r.alpha_initial_has_factor && r.alpha_terminal_has_factor &&
                                      r.beta_initial_has_factor && r.beta_terminal_has_factor);
  return r;
}

}  // namespace racg
