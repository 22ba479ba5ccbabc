#pragma once

#include <cstdint>
#include <string>

#include "racg/graph.hpp"
#include "racg/oracle.hpp"

// Exhaustive checks of the word-level group properties against an oracle ball. Each
// returns how many instances were examined and how many failed.
namespace racg::props {

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::string first;  // description of the first violation

  void fail(std::string what);
  Tally& operator+=(const Tally& other);
};

/// Oracle ball of radius 2r shared by the checks below.
struct Context {
  Context(const PresentationGraph& graph, int r);
  PresentationGraph graph;
  int r;
  Ball big;  // radius 2r
};

/// Special subgroup elements of length <= r are geodesic in S, and every
/// geodesic for them uses only letters of the subset.
Tally convex(const Context& ctx);
/// A U-geodesic followed by a V-geodesic, U and V disjoint, is geodesic.
Tally concatenation(const Context& ctx);
/// s not in U and s u t in <U> force t = s, s u s = u and s commuting with u.
Tally sut_commutation(const Context& ctx);
/// The coset v<T> has a unique shortest element, and (geodesic to it)
/// followed by a T-geodesic is geodesic.
Tally projection(const Context& ctx);
/// B(g) is a clique and every l(gs) is l(g) +- 1.
Tally descent_clique(const Context& ctx);

}  // namespace racg::props
