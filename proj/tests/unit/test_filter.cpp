#include <gtest/gtest.h>

#include "racg/errors.hpp"
#include "racg/filter.hpp"
#include "racg/io.hpp"
#include "racg/oracle.hpp"
#include "test_util.hpp"

namespace racg {
namespace {

using test::nf;
using test::set;
using test::w;

Word repeat(const PresentationGraph& g, std::string_view head, std::string_view period, int length) {
  Word out = w(g, head);
  const Word p = w(g, period);
  for (std::size_t i = 0; static_cast<int>(out.size()) < length; ++i) out.push_back(p[i % p.size()]);
  out.resize(static_cast<std::size_t>(length));
  return out;
}

TEST(TauPath, FiniteCaseAdjustsAdjacentLetters) {
  const PresentationGraph c5 = fixture("C5");
  const TauPath t = tau_path(c5, w(c5, "a"), c5.index_of("c"), c5.index_of("d"));
  EXPECT_EQ(t.mode, TauMode::FiniteCase);
  EXPECT_EQ(t.forbidden, set(c5, {"a"}));
  EXPECT_EQ(t.vertices, w(c5, "c d c d"));
}

TEST(TauPath, EqualLetters) {
  const PresentationGraph c5 = fixture("C5");
  const TauPath t = tau_path(c5, w(c5, "a"), c5.index_of("c"), c5.index_of("c"));
  EXPECT_EQ(t.vertices, w(c5, "c b c"));
}

TEST(TauPath, EmptyPrefix) {
  const PresentationGraph c5 = fixture("C5");
  const TauPath t = tau_path(c5, {}, c5.index_of("c"), c5.index_of("d"));
  EXPECT_TRUE(t.forbidden.empty());
  EXPECT_EQ(t.vertices, w(c5, "c d c d"));
}

TEST(TauPath, RejectsNonGeodesicLetters) {
  const PresentationGraph c5 = fixture("C5");
  EXPECT_THROW(tau_path(c5, w(c5, "a"), c5.index_of("a"), c5.index_of("c")), InputError);
}

TEST(TauPath, InfiniteCaseAvoidsForbidden) {
  const PresentationGraph g = test::prism();
  // The suffix v3 v5 is a factor path of the square v0 v3 v2 v5.
  const Word prefix = w(g, "v0 v3 v5");
  const TauPath t = tau_path(g, prefix, g.index_of("v2"), g.index_of("v3"));
  EXPECT_EQ(t.mode, TauMode::InfiniteCase);
  const VertexSet c = set(g, {"v3", "v5"});
  EXPECT_EQ(t.forbidden, c | link(g, c));
  for (std::size_t i = 1; i + 1 < t.vertices.size(); ++i) EXPECT_FALSE(t.forbidden.contains(t.vertices[i]));
  EXPECT_TRUE(descent_set(g, normal_form(g, prefix)).subset_of(t.forbidden));
}

TEST(TauPath, InteriorAvoidsForbiddenOnPrism) {
  const PresentationGraph g = test::prism();
  const Ball b = ball(g, 4);
  int infinite = 0;
  for (const NormalForm& e : b.elements()) {
    for (int a = 0; a < g.size(); ++a) {
      for (int c = 0; c < g.size(); ++c) {
        if (!extends_geodesic(g, e.word(), static_cast<Letter>(a)) ||
            !extends_geodesic(g, e.word(), static_cast<Letter>(c))) {
          continue;
        }
        const TauPath t = tau_path(g, e.word(), static_cast<Letter>(a), static_cast<Letter>(c));
        ASSERT_GE(t.vertices.size(), 3U);
        EXPECT_EQ(t.vertices.front(), a);
        EXPECT_EQ(t.vertices.back(), c);
        for (std::size_t i = 0; i + 1 < t.vertices.size(); ++i) EXPECT_TRUE(g.adjacent(t.vertices[i], t.vertices[i + 1]));
        for (std::size_t i = 1; i + 1 < t.vertices.size(); ++i) EXPECT_FALSE(t.forbidden.contains(t.vertices[i]));
        if (t.mode != TauMode::InfiniteCase) continue;
        ++infinite;
        EXPECT_TRUE(descent_set(g, e).subset_of(t.forbidden));
        EXPECT_FALSE(separates(g, t.forbidden).separates);
      }
    }
  }
  EXPECT_GT(infinite, 0);
}

TEST(BuildFan, Examples) {
  const PresentationGraph c5 = fixture("C5");
  const Fan f = build_fan(c5, w(c5, "a"), c5.index_of("c"), c5.index_of("d"));
  EXPECT_EQ(f.tau.vertices, w(c5, "c d c d"));
  EXPECT_EQ(f.base, nf(c5, "a"));
  for (std::size_t i = 0; i + 1 < f.tau.vertices.size(); ++i) {
    Word loop = w(c5, "a");
    loop.push_back(f.tau.vertices[i]);
    loop.push_back(f.tau.vertices[i + 1]);
    EXPECT_TRUE(is_geodesic(c5, loop));
    EXPECT_TRUE(c5.adjacent(f.tau.vertices[i], f.tau.vertices[i + 1]));
  }
  EXPECT_EQ(build_fan(c5, w(c5, "a"), c5.index_of("c"), c5.index_of("c")).tau.vertices, w(c5, "c b c"));
  EXPECT_EQ(build_fan(c5, {}, c5.index_of("c"), c5.index_of("d")).tau.vertices, w(c5, "c d c d"));
}

Filter c5_filter(int depth, int length) {
  const PresentationGraph c5 = fixture("C5");
  return build_filter(c5, repeat(c5, "", "a c", length), repeat(c5, "", "a d", length), depth);
}

TEST(BuildFilter, FirstFanRow) {
  const Filter f = c5_filter(3, 5);
  EXPECT_EQ(f.prefix_length, 1);
  EXPECT_EQ(f.top(), 4);
  const CayleyReport r = map_to_cayley(f);
  ASSERT_TRUE(r.ok());
  const PresentationGraph& g = f.graph;
  EXPECT_EQ(r.elements[2], (std::vector<NormalForm>{nf(g, "a c"), nf(g, "a d"), nf(g, "a c"), nf(g, "a d")}));
}

TEST(BuildFilter, DepthZeroIsThePrefixColumn) {
  const Filter f = c5_filter(0, 5);
  EXPECT_EQ(f.prefix_length, 1);
  EXPECT_EQ(f.top(), 1);
  EXPECT_EQ(f.vertices.size(), 2U);
  EXPECT_TRUE(verify_facts(f).ok());
  const FactorBound fb = check_factor_bound(f);
  EXPECT_EQ(fb.max_length, 0);
  EXPECT_TRUE(fb.pass);
  const TreeView t = extract_tree(f);
  EXPECT_EQ(t.edges.size(), 1U);
  EXPECT_EQ(export_dot(f).find("dashed"), std::string::npos);
}

TEST(BuildFilter, EqualRaysUseEqualLetterFans) {
  const PresentationGraph c5 = fixture("C5");
  const Word ray = repeat(c5, "", "a c", 6);
  const Filter f = build_filter(c5, ray, ray, 3);
  EXPECT_EQ(f.prefix_length, 3);
  EXPECT_TRUE(verify_facts(f).ok());
  EXPECT_TRUE(map_to_cayley(f).ok());
}

TEST(BuildFilter, Errors) {
  const PresentationGraph c5 = fixture("C5");
  EXPECT_THROW(build_filter(c5, w(c5, "a b a"), w(c5, "a"), 0), InputError);
  EXPECT_THROW(build_filter(c5, w(c5, "a c"), w(c5, "a d"), 3), InputError);
  EXPECT_THROW(build_filter(c5, w(c5, "a c"), w(c5, "a d"), -1), InputError);
}

TEST(ExtractTree, IsASpanningTreeWithoutUpperLeftEdges) {
  const Filter f = c5_filter(3, 5);
  const TreeView t = extract_tree(f);
  EXPECT_TRUE(t.connected);
  EXPECT_TRUE(t.acyclic);
  EXPECT_EQ(t.edges.size() + 1, f.vertices.size());
  std::vector<bool> kept(f.edges.size(), false);
  for (int e : t.edges) kept[static_cast<std::size_t>(e)] = true;
  for (std::size_t e = 0; e < f.edges.size(); ++e) {
    if (kept[e]) continue;
    EXPECT_FALSE(f.edges[e].is_tree);
    EXPECT_EQ(f.edges[e].kind, EdgeKind::RightFan);
    // An upper-left loop edge ends at an apex with two edges below it.
    EXPECT_EQ(f.vertices[static_cast<std::size_t>(f.edges[e].upper)].down_edges.size(), 2U);
  }
}

TEST(VerifyFacts, DetectsFlippedTreeFlag) {
  Filter f = c5_filter(4, 6);
  ASSERT_TRUE(verify_facts(f).ok());
  int flipped = -1;
  for (std::size_t e = 0; e < f.edges.size(); ++e) {
    if (f.edges[e].kind == EdgeKind::Interior) {
      f.edges[e].is_tree = false;
      flipped = static_cast<int>(e);
      break;
    }
  }
  ASSERT_GE(flipped, 0);
  const FactReport r = verify_facts(f);
  ASSERT_FALSE(r.ok());
  bool found = false;
  for (const FactViolation& v : r.violations) found = found || (v.fact == 6 && v.edge == flipped);
  EXPECT_TRUE(found);
}

TEST(MapToCayley, PrefixColumnAndApexes) {
  const Filter f = c5_filter(4, 6);
  const CayleyReport r = map_to_cayley(f);
  ASSERT_TRUE(r.ok());
  for (int j = 0; j <= f.prefix_length; ++j) {
    const Word prefix(f.alpha.begin(), f.alpha.begin() + j);
    EXPECT_EQ(r.elements[static_cast<std::size_t>(j)].front(), normal_form(f.graph, prefix));
  }
  for (const FilterVertex& v : f.vertices) {
    if (v.down_edges.size() == 2) {
      EXPECT_GE(v.level, f.prefix_length + 2);
    }
  }
  for (std::size_t level = 0; level < r.elements.size(); ++level) {
    for (const NormalForm& e : r.elements[level]) EXPECT_EQ(e.length(), static_cast<int>(level));
  }
}

TEST(ExportDot, OneDashedEdgePerLoopAndDeterministic) {
  const Filter f = c5_filter(2, 5);
  const std::string dot = export_dot(f);
  std::size_t dashed = 0;
  for (std::size_t p = dot.find("dashed"); p != std::string::npos; p = dot.find("dashed", p + 1)) ++dashed;
  std::size_t apexes = 0;
  for (const FilterVertex& v : f.vertices) apexes += v.down_edges.size() == 2 ? 1 : 0;
  EXPECT_GT(apexes, 0U);
  EXPECT_EQ(dashed, apexes);
  EXPECT_EQ(dot, export_dot(c5_filter(2, 5)));
  EXPECT_EQ(dot.rfind("digraph filter {", 0), 0U);
  EXPECT_NE(dot.find("{ rank=same; v0_0; }"), std::string::npos);
}

class FilterDepths : public ::testing::TestWithParam<int> {};

TEST_P(FilterDepths, PentagonPassesAllChecks) {
  const int depth = GetParam();
  const Filter f = c5_filter(depth, depth + 1);
  EXPECT_TRUE(verify_facts(f).ok());
  EXPECT_TRUE(map_to_cayley(f).ok());
  const FactorBound fb = check_factor_bound(f);
  EXPECT_EQ(fb.max_length, 0);
  EXPECT_TRUE(fb.pass);
}

TEST_P(FilterDepths, PrismPassesAllChecks) {
  const PresentationGraph g = test::prism();
  const int depth = GetParam();
  const Filter f = build_filter(g, repeat(g, "", "v0 v2", depth + 1), repeat(g, "v0", "v3 v5", depth + 1), depth);
  const FactReport facts = verify_facts(f);
  EXPECT_TRUE(facts.ok()) << (facts.ok() ? "" : facts.violations.front().detail);
  EXPECT_TRUE(map_to_cayley(f).ok());
  const FactorBound fb = check_factor_bound(f);
  EXPECT_TRUE(fb.pass);
  EXPECT_LE(fb.max_length, 3 * g.size());
  EXPECT_EQ(fb.repeat_violations, 0U);
  for (const FilterFan& fan : f.fans) {
    const std::vector<Letter>& t = fan.fan.tau.vertices;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      EXPECT_TRUE(g.adjacent(t[i], t[i + 1]));
      Word probe = fan.fan.prefix;
      probe.push_back(t[i]);
      probe.push_back(t[i + 1]);
      EXPECT_TRUE(is_geodesic(g, probe));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Depths, FilterDepths, ::testing::Range(1, 7));

TEST(FilterDepths, PrismHasInfiniteCaseFans) {
  const PresentationGraph g = test::prism();
  const Filter f = build_filter(g, repeat(g, "", "v0 v2", 7), repeat(g, "v0", "v3 v5", 7), 6);
  int infinite = 0;
  for (const FilterFan& fan : f.fans) infinite += fan.fan.tau.mode == TauMode::InfiniteCase ? 1 : 0;
  EXPECT_GT(infinite, 0);
}

}  // namespace
}  // namespace racg
