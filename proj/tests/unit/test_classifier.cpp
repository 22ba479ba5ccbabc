#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "racg/classifier.hpp"
#include "racg/errors.hpp"
#include "racg/io.hpp"
#include "test_util.hpp"

namespace racg {
namespace {

using test::set;
using Kind = Verdict::Kind;

struct Expected {
  const char* fixture;
  Kind kind;
  Rule rule;
};

const Expected kTable[] = {
    {"C5", Kind::LocallyConnected, Rule::MainTheorem},
    {"C6", Kind::LocallyConnected, Rule::MainTheorem},
    {"G7", Kind::NotLocallyConnected, Rule::VfsNonSuspended},
    {"BOWTIE", Kind::NotLocallyConnected, Rule::InfiniteEnded},
    {"K3", Kind::LocallyConnected, Rule::FiniteGroup},
    {"P3", Kind::LocallyConnected, Rule::TwoEnded},
    {"C4", Kind::LocallyConnected, Rule::JoinRecursion},
    {"SUS4", Kind::LocallyConnected, Rule::JoinRecursion},
};

bool consumes_certificate(Rule r) {
  return r == Rule::VfsNonSuspended || r == Rule::JoinRecursion || r == Rule::InfiniteEnded;
}

void expect_sound(const PresentationGraph& g, const Classification& c) {
  for (const TraceStep& step : c.trace) {
    EXPECT_EQ(step.certificate.has_value(), consumes_certificate(step.rule)) << to_string(step.rule);
    if (step.certificate) {
      EXPECT_EQ(certificate_problem(g, step.subgraph, *step.certificate), "");
    }
    const bool nlc_rule = step.rule == Rule::InfiniteEnded || step.rule == Rule::VfsNonSuspended;
    if (c.verdict.kind == Kind::LocallyConnected) {
      EXPECT_FALSE(nlc_rule);
    }
  }
  for (std::size_t i = 1; i < c.trace.size(); ++i) {
    EXPECT_LT(c.trace[i].subgraph.size(), c.trace.front().subgraph.size());
  }
}

TEST(Classify, FixtureTable) {
  for (const Expected& e : kTable) {
    const PresentationGraph g = fixture(e.fixture);
    const Classification c = classify(g);
    EXPECT_EQ(c.verdict.kind, e.kind) << e.fixture;
    ASSERT_FALSE(c.trace.empty());
    EXPECT_EQ(c.trace.front().rule, e.rule) << e.fixture;
    EXPECT_EQ(c.trace.front().subgraph, g.all());
    expect_sound(g, c);
  }
}

TEST(Classify, Certificates) {
  const PresentationGraph g7 = fixture("G7");
  const VertexSet c = set(g7, {"c1", "c2"});
  EXPECT_EQ(classify(g7).trace.front().certificate, SeparatorCertificate(Vfs{c, c, set(g7, {"k1", "k2"}), false}));

  const PresentationGraph bowtie = fixture("BOWTIE");
  EXPECT_EQ(classify(bowtie).trace.front().certificate, SeparatorCertificate(SeparatingClique{set(bowtie, {"z"})}));

  const PresentationGraph c4 = fixture("C4");
  const Classification square = classify(c4);
  EXPECT_EQ(square.trace.front().certificate,
            SeparatorCertificate(JoinSplit{{set(c4, {"a", "c"}), set(c4, {"b", "d"})}}));
  ASSERT_EQ(square.trace.size(), 3U);
  EXPECT_EQ(square.trace[1].rule, Rule::TwoEnded);
  EXPECT_EQ(square.trace[2].rule, Rule::TwoEnded);

  const PresentationGraph sus4 = fixture("SUS4");
  const Classification sus = classify(sus4);
  ASSERT_EQ(sus.trace.size(), 4U);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(sus.trace[i].rule, Rule::TwoEnded);
}

TEST(Classify, RejectsEmptyGraph) { EXPECT_THROW(classify(PresentationGraph{}), InputError); }

TEST(Classify, InvariantUnderPermutation) {
  std::mt19937_64 rng(2024);
  for (const Expected& e : kTable) {
    const PresentationGraph g = fixture(e.fixture);
    std::vector<int> order(static_cast<std::size_t>(g.size()));
    std::iota(order.begin(), order.end(), 0);
    for (int i = 0; i < 10; ++i) {
      std::shuffle(order.begin(), order.end(), rng);
      const PresentationGraph p = permuted(g, order);
      const Classification c = classify(p);
      EXPECT_EQ(c.verdict, classify(g).verdict) << e.fixture;
      EXPECT_EQ(c.trace.front().rule, e.rule) << e.fixture;
      expect_sound(p, c);
    }
  }
}

TEST(Classify, ExhaustiveSmallGraphs) {
  std::map<Kind, int> histogram;
  for (int n = 1; n <= 4; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      const PresentationGraph g = graph_from_code(n, code);
      const Classification c = classify(g);
      ++histogram[c.verdict.kind];
      expect_sound(g, c);
    }
  }
  // Up to four vertices every graph is decided.
  EXPECT_EQ(histogram[Kind::Undetermined], 0);
  EXPECT_GT(histogram[Kind::LocallyConnected], 0);
  EXPECT_GT(histogram[Kind::NotLocallyConnected], 0);
}

TEST(Survey, DeterministicAndSound) {
  const SurveySummary a = classify_survey(6, 120, 99);
  const SurveySummary b = classify_survey(6, 120, 99);
  EXPECT_EQ(a.samples, 120);
  EXPECT_EQ(a.verdicts, b.verdicts);
  EXPECT_EQ(a.rules, b.rules);
  EXPECT_EQ(a.undetermined, b.undetermined);
  EXPECT_EQ(a.certificate_failures, 0);
  int total = 0;
  for (const auto& [name, count] : a.verdicts) total += count;
  EXPECT_EQ(total, 120);
}

TEST(Survey, EmptyAndErrors) {
  const SurveySummary s = classify_survey(4, 0, 1);
  EXPECT_EQ(s.samples, 0);
  EXPECT_TRUE(s.verdicts.empty());
  EXPECT_THROW(classify_survey(0, 1, 1), InputError);
  EXPECT_THROW(classify_survey(4, -1, 1), InputError);
}

TEST(GraphFromCode, BitOrder) {
  const PresentationGraph g = graph_from_code(3, 0b101);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_TRUE(g.adjacent(1, 2));
}

}  // namespace
}  // namespace racg
