#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "racg/errors.hpp"
#include "racg/io.hpp"
#include "racg/oracle.hpp"
#include "racg/separators.hpp"
#include "test_util.hpp"

namespace racg {
namespace {

using test::set;

TEST(FindProductSeparator, Examples) {
  EXPECT_FALSE(find_product_separator(fixture("C5")));
  const PresentationGraph g7 = fixture("G7");
  EXPECT_EQ(find_product_separator(g7), (ProductSeparator{set(g7, {"c1", "c2"}), set(g7, {"k1", "k2"})}));
  EXPECT_FALSE(find_product_separator(fixture("C4")));
}

TEST(FindVfs, Examples) {
  EXPECT_FALSE(find_vfs(fixture("C5")));
  const PresentationGraph g7 = fixture("G7");
  const VertexSet c = set(g7, {"c1", "c2"});
  EXPECT_EQ(find_vfs(g7), (Vfs{c, c, set(g7, {"k1", "k2"}), false}));
  const PresentationGraph sus4 = fixture("SUS4");
  const VertexSet square = set(sus4, {"a", "b", "c", "d"});
  EXPECT_EQ(find_vfs(sus4), (Vfs{square, square, set(sus4, {"s", "t"}), true}));
}

TEST(LinkCriterion, Examples) {
  EXPECT_FALSE(has_vfs_via_link_criterion(fixture("C5")));
  EXPECT_FALSE(has_vfs_via_link_criterion(fixture("C6")));
  // z is a cone point, so the bowtie is a join and fails the precondition.
  EXPECT_THROW(has_vfs_via_link_criterion(fixture("BOWTIE")), InputError);
  EXPECT_THROW(has_vfs_via_link_criterion(fixture("G7")), InputError);
}

TEST(IsSuspended, Examples) {
  const PresentationGraph sus4 = fixture("SUS4");
  EXPECT_TRUE(is_suspended(sus4, set(sus4, {"a", "b", "c", "d"})));
  const PresentationGraph g7 = fixture("G7");
  EXPECT_FALSE(is_suspended(g7, set(g7, {"c1", "c2"})));
  const PresentationGraph c5 = fixture("C5");
  EXPECT_FALSE(is_suspended(c5, set(c5, {"a", "b", "c"})));
  // Each pair of opposite vertices suspends the other four.
  EXPECT_EQ(suspended_separators(sus4),
            (std::vector<VertexSet>{set(sus4, {"a", "b", "c", "d"}), set(sus4, {"a", "c", "s", "t"}),
                                    set(sus4, {"b", "d", "s", "t"})}));
}

TEST(FiniteIndexSpecial, Examples) {
  const PresentationGraph c5 = fixture("C5");
  EXPECT_TRUE(finite_index_special(c5, set(c5, {"a", "c"}), set(c5, {"a", "c"})));
  const PresentationGraph k3 = fixture("K3");
  EXPECT_TRUE(finite_index_special(k3, set(k3, {"a", "b"}), {}));
  EXPECT_FALSE(finite_index_special(c5, set(c5, {"a", "c"}), set(c5, {"a"})));
  EXPECT_THROW(finite_index_special(c5, set(c5, {"a"}), set(c5, {"b"})), InputError);
}

TEST(Ends, Examples) {
  EXPECT_EQ(ends(fixture("K3")), EndsClass::Zero);
  EXPECT_EQ(ends(fixture("P3")), EndsClass::Two);
  EXPECT_EQ(ends(fixture("BOWTIE")), EndsClass::Infinite);
  EXPECT_EQ(ends(fixture("C5")), EndsClass::One);
}

TEST(Ends, MatchesOracleGrowth) {
  for (const std::string& name : fixture_names()) {
    const PresentationGraph g = fixture(name);
    const std::vector<std::size_t> spheres = ball(g, 7).sphere_sizes();
    const EndsClass e = ends(g);
    EXPECT_EQ(e == EndsClass::Zero, spheres[7] == 0) << name;
    EXPECT_EQ(e == EndsClass::Two, spheres[7] != 0 && spheres[6] == spheres[7] && spheres[5] == spheres[6]) << name;
    EXPECT_EQ(e == EndsClass::One || e == EndsClass::Infinite, spheres[7] > spheres[6]) << name;
  }
}

TEST(FindSeparatingClique, Examples) {
  const PresentationGraph bowtie = fixture("BOWTIE");
  EXPECT_EQ(find_separating_clique(bowtie, bowtie.all()), set(bowtie, {"z"}));
  EXPECT_FALSE(find_separating_clique(fixture("C5"), fixture("C5").all()));
  const PresentationGraph p3 = fixture("P3");
  EXPECT_EQ(find_separating_clique(p3, set(p3, {"a", "c"})), VertexSet{});
  EXPECT_EQ(strip_clique_factors(p3, p3.all()), set(p3, {"a", "c"}));
}

TEST(Certificates, RevalidateAndRejectCorruption) {
  const PresentationGraph g7 = fixture("G7");
  const Vfs vfs = *find_vfs(g7);
  EXPECT_EQ(certificate_problem(g7, g7.all(), vfs), "");
  EXPECT_EQ(certificate_kind(vfs), "Vfs");
  Vfs clique_k = vfs;
  clique_k.k = set(g7, {"k1"});
  EXPECT_NE(certificate_problem(g7, g7.all(), clique_k), "");
  Vfs flipped = vfs;
  flipped.suspended = true;
  EXPECT_NE(certificate_problem(g7, g7.all(), flipped), "");

  const ProductSeparator ps = *find_product_separator(g7);
  EXPECT_EQ(certificate_problem(g7, g7.all(), ps), "");
  EXPECT_NE(certificate_problem(g7, g7.all(), ProductSeparator{ps.a, ps.a}), "");

  const PresentationGraph bowtie = fixture("BOWTIE");
  EXPECT_EQ(certificate_problem(bowtie, bowtie.all(), SeparatingClique{set(bowtie, {"z"})}), "");
  EXPECT_NE(certificate_problem(bowtie, bowtie.all(), SeparatingClique{set(bowtie, {"a"})}), "");

  const PresentationGraph c4 = fixture("C4");
  EXPECT_EQ(certificate_problem(c4, c4.all(), JoinSplit{join_factors(c4)}), "");
  EXPECT_NE(certificate_problem(c4, c4.all(), JoinSplit{{c4.all()}}), "");
}

// Distance from v to <C1> inside <C> is the length of the shortest element of <C1> v.
int max_distance_to_subgroup(const Ball& b, VertexSet c1) {
  int out = 0;
  for (const NormalForm& v : b.elements()) {
    const NormalForm shortest = project_to_coset(b.graph(), inverse(b.graph(), v), c1);
    out = std::max(out, shortest.length());
  }
  return out;
}

TEST(FiniteIndexSpecial, MatchesOracleEvidence) {
  for (const char* name : {"C4", "C5", "K3", "P3", "SUS4", "BOWTIE"}) {
    const PresentationGraph g = fixture(name);
    for (VertexSet c : subsets_size_lex(g.all())) {
      if (c.empty()) continue;
      const PresentationGraph sub = induced(g, c);
      const Ball small = ball(sub, 3), large = ball(sub, 6);
      for (VertexSet c1 : subsets_size_lex(sub.all())) {
        const bool fi = finite_index_special(g, c, lift(c1, c));
        EXPECT_EQ(fi, bf::finite_index(g, c.bits(), lift(c1, c).bits())) << name;
        const int near = max_distance_to_subgroup(small, c1), far = max_distance_to_subgroup(large, c1);
        if (fi) {
          EXPECT_LE(far, c.size()) << name;
        } else {
          EXPECT_GT(far, near) << name;
        }
      }
    }
  }
}

class SeparatorsVsBruteForce : public ::testing::TestWithParam<int> {};

TEST_P(SeparatorsVsBruteForce, Agree) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  for (int i = 0; i < 10; ++i) {
    const PresentationGraph g = bf::random_graph(rng, 4 + i % 3);
    const bf::VfsCensus census = bf::vfs_census(g);
    const std::optional<Vfs> vfs = find_vfs(g);
    ASSERT_EQ(vfs.has_value(), census.any);
    if (vfs) {
      EXPECT_EQ(!vfs->suspended, census.non_suspended);
      EXPECT_EQ(certificate_problem(g, g.all(), *vfs), "");
    }
    const std::optional<ProductSeparator> ps = find_product_separator(g);
    ASSERT_EQ(ps.has_value(), bf::has_product_separator(g));
    if (ps) {
      EXPECT_EQ(certificate_problem(g, g.all(), *ps), "");
    }
    EXPECT_EQ(ends(g) == EndsClass::One, bf::one_ended(g));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SeparatorsVsBruteForce, ::testing::Range(1, 6));

}  // namespace
}  // namespace racg
