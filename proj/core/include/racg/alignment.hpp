#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "racg/word.hpp"

namespace racg {

struct AlignmentResult {
  Word alpha_prime;  // geodesic to g
  Word beta_prime;   // geodesic to h
  int common_prefix_length = 0;
};

/// Given a geodesic `alpha` to g and a target h at distance n, produce
/// geodesics to g and h that agree on an initial segment of length at least
/// l(g) - n and stay within n of the vertices of alpha. The path from g to h
/// used at each induction step is the normal form of g^-1 h.
AlignmentResult align(const PresentationGraph& graph, std::span<const Letter> alpha, const NormalForm& h);

/// Half-open [start, end) range of letters.
struct Subpath {
  std::size_t start = 0;
  std::size_t end = 0;
  friend bool operator==(const Subpath&, const Subpath&) = default;
};

/// Least-start subword of length >= k whose letters admit a factor cover,
/// extended as far right as it stays coverable.
std::optional<Subpath> find_factor_subpath(const PresentationGraph& graph, std::span<const Letter> w, int k);
std::optional<Subpath> find_factor_subpath(const PresentationGraph& graph, const FactorPairs& pairs,
                                           std::span<const Letter> w, int k);

/// |S|^2 2^|S| k + 2|S|, saturating at UINT64_MAX.
std::uint64_t divergence_threshold(int generators, int k);

struct DivergenceReport {
  int distance = 0;            // d(alpha(n), beta(n))
  std::uint64_t threshold = 0;  // delta(k)
  bool triggered = false;       // distance >= threshold
  bool alpha_initial_has_factor = false;
  bool alpha_terminal_has_factor = false;
  bool beta_initial_has_factor = false;
  bool beta_terminal_has_factor = false;
  bool counterexample = false;  // triggered but some segment lacks a length-k factor subpath
};

/// Checks the implication "far apart at time n => factor subpaths of length k
/// on both sides of n" for two geodesics with the same endpoints. `threshold`
/// overrides delta(k) when given.
DivergenceReport divergence_bound_check(const PresentationGraph& graph, std::span<const Letter> alpha,
                                        std::span<const Letter> beta, int n, int k,
                                        std::optional<std::uint64_t> threshold = std::nullopt);

}  // namespace racg
