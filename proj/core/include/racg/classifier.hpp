#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "racg/separators.hpp"

namespace racg {

struct Verdict {
  enum class Kind { LocallyConnected, NotLocallyConnected, Undetermined };
  Kind kind = Kind::Undetermined;
  std::string reason;  // Undetermined only

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string to_string(Verdict::Kind k);

enum class Rule { FiniteGroup, TwoEnded, InfiniteEnded, VfsNonSuspended, JoinRecursion, MainTheorem, Gap };

std::string to_string(Rule r);

/// One decision. Subgraph and certificate use the input graph's indices.
struct TraceStep {
  VertexSet subgraph;
  Rule rule = Rule::Gap;
  std::optional<SeparatorCertificate> certificate;
};

struct Classification {
  Verdict verdict;
  std::vector<TraceStep> trace;  // pre-order over the join recursion
};

Classification classify(const PresentationGraph& graph);

struct SurveySummary {
  std::uint64_t seed = 0;
  int samples = 0;
  std::map<std::string, int> verdicts;  // verdict name -> count
  std::map<std::string, int> rules;     // terminal rule of the whole graph -> count
  std::vector<PresentationGraph> undetermined;
  int certificate_failures = 0;
};

/// Classifies `sample_count` random graphs with 1..size_limit vertices, each
/// edge present with probability 1/2, drawn from mt19937_64 seeded by `seed`.
SurveySummary classify_survey(int size_limit, int sample_count, std::uint64_t seed);

/// Graph number `code` on n vertices v0..v(n-1): bit k of `code` selects the
/// k-th pair (i, j), i < j, in lexicographic order.
PresentationGraph graph_from_code(int n, std::uint64_t code);

}  // namespace racg
