#include "racg/classifier.hpp"

#include <random>

#include "racg/errors.hpp"

namespace racg {

std::string to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::LocallyConnected: return "LocallyConnected";
    case Verdict::Kind::NotLocallyConnected: return "NotLocallyConnected";
    case Verdict::Kind::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::FiniteGroup: return "FiniteGroup";
    case Rule::TwoEnded: return "TwoEnded";
    case Rule::InfiniteEnded: return "InfiniteEnded";
    case Rule::VfsNonSuspended: return "VfsNonSuspended";
    case Rule::JoinRecursion: return "JoinRecursion";
    case Rule::MainTheorem: return "MainTheorem";
    case Rule::Gap: return "Gap";
  }
  return "?";
}

namespace {

constexpr const char* kGapReason = "product separator without usable VFS";

Verdict lc() { return {Verdict::Kind::LocallyConnected, {}}; }
Verdict nlc() { return {Verdict::Kind::NotLocallyConnected, {}}; }

Vfs lifted(Vfs v, VertexSet within) {
  return {lift(v.c, within), lift(v.c1, within), lift(v.k, within), v.suspended};
}

Verdict classify_within(const PresentationGraph& graph, VertexSet within, std::vector<TraceStep>& trace) {
  const PresentationGraph sub = induced(graph, within);
  auto record = [&](Rule rule, std::optional<SeparatorCertificate> cert = std::nullopt) {
    trace.push_back(TraceStep{within, rule, std::move(cert)});
  };

  switch (ends(sub)) {
    case EndsClass::Zero:
      record(Rule::FiniteGroup);
      return lc();
    case EndsClass::Two:
      record(Rule::TwoEnded);
      return lc();
    case EndsClass::Infinite: {
      // A separating clique of the non-clique part, joined with the clique factors.
      const VertexSet rest = strip_clique_factors(sub, sub.all());
      const VertexSet q = *find_separating_clique(sub, rest) | (sub.all() - rest);
      record(Rule::InfiniteEnded, SeparatingClique{lift(q, within)});
      return nlc();
    }
    case EndsClass::One:
      break;
  }

  const std::optional<Vfs> vfs = find_vfs(sub);
  if (vfs && !vfs->suspended) {
    record(Rule::VfsNonSuspended, lifted(*vfs, within));
    return nlc();
  }

  const std::vector<VertexSet> factors = join_factors(sub);
  if (factors.size() > 1) {
    JoinSplit split;
    for (VertexSet f : factors) split.factors.push_back(lift(f, within));
    record(Rule::JoinRecursion, split);
    bool any_nlc = false, all_lc = true;
    std::string reason;
    for (VertexSet f : split.factors) {
      if (f.size() == 1) continue;
      const Verdict v = classify_within(graph, f, trace);
      any_nlc = any_nlc || v.kind == Verdict::Kind::NotLocallyConnected;
      if (v.kind != Verdict::Kind::LocallyConnected) all_lc = false;
      if (v.kind == Verdict::Kind::Undetermined && reason.empty()) reason = v.reason;
    }
    if (any_nlc) return nlc();
    if (all_lc) return lc();
    return {Verdict::Kind::Undetermined, reason};
  }

  if (!find_product_separator(sub) && !vfs) {
    record(Rule::MainTheorem);
    return lc();
  }
  record(Rule::Gap);
  return {Verdict::Kind::Undetermined, kGapReason};
}

}  // namespace

Classification classify(const PresentationGraph& graph) {
  if (graph.size() == 0) throw InputError("classify needs a nonempty graph");
  Classification out;
  out.verdict = classify_within(graph, graph.all(), out.trace);
  return out;
}

PresentationGraph graph_from_code(int n, std::uint64_t code) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  PresentationGraph g(std::move(names));
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((code >> bit) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

SurveySummary classify_survey(int size_limit, int sample_count, std::uint64_t seed) {
  if (size_limit < 1 || size_limit > 11) throw InputError("survey size limit must be in 1..11");
  if (sample_count < 0) throw InputError("survey sample count must be non-negative");
  SurveySummary summary;
  summary.seed = seed;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < sample_count; ++s) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(size_limit));
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t code = pairs == 0 ? 0 : rng() & ((std::uint64_t{1} << pairs) - 1);
    const PresentationGraph g = graph_from_code(n, code);
    const Classification c = classify(g);
    ++summary.samples;
    ++summary.verdicts[to_string(c.verdict.kind)];
    ++summary.rules[to_string(c.trace.front().rule)];
    if (c.verdict.kind == Verdict::Kind::Undetermined) summary.undetermined.push_back(g);
    for (const TraceStep& step : c.trace) {
      if (step.certificate && !certificate_problem(g, step.subgraph, *step.certificate).empty()) {
        ++summary.certificate_failures;
      }
    }
  }
  return summary;
}

}  // namespace racg
