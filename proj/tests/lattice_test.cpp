#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "hcomm/corpus.hpp"
#include "hcomm/error.hpp"
#include "hcomm/exact.hpp"
#include "hcomm/lattice.hpp"
#include "test_support.hpp"

namespace hcomm {
namespace {

using testing::G;

std::vector<std::size_t> orders(const AbelianPoset& p) {
  std::vector<std::size_t> out;
  for (const auto& s : p.members()) out.push_back(s.order());
  return out;
}

AbelianPoset::Node node_with_order(const AbelianPoset& p, std::size_t order) {
  for (AbelianPoset::Node n = 0; n < p.size(); ++n) {
    if (p.node_order(n) == order) return n;
  }
  ADD_FAILURE() << "no member of order " << order;
  return 0;
}

TEST(AbelianLattice, EnumerationExamples) {
  EXPECT_EQ(orders(enumerate_abelian_subgroups(G("cyclic(6)"))), (std::vector<std::size_t>{1, 2, 3, 6}));
  EXPECT_EQ(orders(enumerate_abelian_subgroups(G("symmetric(3)"))), (std::vector<std::size_t>{1, 2, 2, 2, 3}));
  EXPECT_EQ(orders(enumerate_abelian_subgroups(G("dihedral(4)"))),
            (std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 4, 4, 4}));
}

TEST(AbelianLattice, StatsExamples) {
  const AbelianStats s3 = abelian_stats(G("symmetric(3)"));
  EXPECT_EQ(s3.m, 3U);
  EXPECT_EQ(s3.n_max, 1U);
  EXPECT_EQ(s3.b, 2U);
  EXPECT_EQ(s3.maximal_count, 4U);
  const AbelianStats d8 = abelian_stats(G("dihedral(4)"));
  EXPECT_EQ(d8.m, 4U);
  EXPECT_EQ(d8.n_max, 3U);
  EXPECT_EQ(d8.b, 2U);
  const AbelianStats h = abelian_stats(G("heisenberg(3)"));
  EXPECT_EQ(h.m, 9U);
  EXPECT_EQ(h.n_max, 4U);
  EXPECT_EQ(h.b, 3U);
}

TEST(AbelianLattice, AbelianGroupsHaveDegenerateStats) {
  for (const auto& e : corpus()) {
    if (!e.group.is_abelian()) continue;
    const AbelianStats s = abelian_stats(e.group);
    EXPECT_EQ(s.m, e.group.order()) << e.spec;
    EXPECT_EQ(s.n_max, 1U);
    EXPECT_EQ(s.b, 0U);
    EXPECT_EQ(s.maximal_count, 1U);
  }
}

TEST(AbelianLattice, MoebiusExamples) {
  const AbelianPoset p = enumerate_abelian_subgroups(G("symmetric(3)"));
  EXPECT_FALSE(p.top_is_member());
  EXPECT_EQ(p.moebius(p.top(), p.top()), 1);
  EXPECT_EQ(p.moebius(node_with_order(p, 3), p.top()), -1);
  EXPECT_EQ(p.moebius(node_with_order(p, 1), p.top()), 3);
  EXPECT_EQ(poset_moebius(p, node_with_order(p, 2), p.top()), -1);
  try {
    p.moebius(node_with_order(p, 3), node_with_order(p, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotComparable);
  }
}

// Interval Moebius of a divisor lattice is the number-theoretic mu.
TEST(AbelianLattice, CyclicMoebiusIsNumberTheoretic) {
  for (std::uint64_t n : {6, 8, 12}) {
    const AbelianPoset p = enumerate_abelian_subgroups(G("cyclic(" + std::to_string(n) + ")"));
    ASSERT_TRUE(p.top_is_member());
    for (AbelianPoset::Node a = 0; a < p.size(); ++a) {
      EXPECT_EQ(p.moebius(a, p.top()), moebius_mu(n / p.node_order(a))) << n;
    }
  }
}

TEST(AbelianLattice, MoebiusDefiningSumVanishes) {
  for (const auto& spec : {"symmetric(4)", "dihedral(6)", "quaternion8", "heisenberg(3)"}) {
    const AbelianPoset p = enumerate_abelian_subgroups(G(spec));
    for (AbelianPoset::Node a = 0; a < p.size(); ++a) {
      std::int64_t sum = 0;
      for (AbelianPoset::Node c = 0; c <= p.size(); ++c) {
        if (p.leq(a, c)) sum += p.moebius(c, p.top());
      }
      EXPECT_EQ(sum, 0) << spec << " node " << a;
    }
  }
}

TEST(AbelianLattice, MembersAreAbelianAndIntersectionClosed) {
  for (const auto& e : corpus()) {
    const AbelianPoset p = enumerate_abelian_subgroups(e.group);
    for (const auto& s : p.members()) {
      EXPECT_TRUE(is_subgroup(e.group, s.members)) << e.spec;
      EXPECT_TRUE(is_abelian(e.group, s)) << e.spec;
    }
    for (const auto& a : p.members()) {
      for (const auto& b : p.members()) EXPECT_TRUE(p.find(a.members & b.members).has_value()) << e.spec;
    }
    EXPECT_TRUE(p.find(trivial_subgroup(e.group).members).has_value());
  }
}

TEST(AbelianLattice, RandomCommutingPairsLandInPoset) {
  std::mt19937 rng(11);
  for (const auto& e : corpus()) {
    const FiniteGroup& g = e.group;
    const AbelianPoset p = enumerate_abelian_subgroups(g);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
    for (int i = 0; i < 40; ++i) {
      const Element x = pick(rng);
      const auto c = g.centralizer_set(x).elements();
      const Element y = c[rng() % c.size()];
      const Element gens[] = {x, y};
      EXPECT_TRUE(p.find(subgroup_closure(g, gens).members).has_value()) << e.spec;
    }
    for (Element x = 0; x < g.order(); ++x) {
      const Element gens[] = {x};
      EXPECT_TRUE(p.find(subgroup_closure(g, gens).members).has_value()) << e.spec;
    }
  }
}

TEST(AbelianLattice, StatsInvariants) {
  for (const auto& e : corpus()) {
    const AbelianStats s = abelian_stats(e.group);
    EXPECT_LE(s.n_max, s.maximal_count) << e.spec;
    if (!e.group.is_abelian()) {
      EXPECT_LT(s.b, s.m) << e.spec;
    }
  }
}

TEST(AbelianLattice, MinimalEntropyStratum) {
  for (const auto& e : corpus()) {
    const FiniteGroup& g = e.group;
    if (g.is_abelian()) continue;
    const std::uint64_t p = smallest_prime_factor(g.order());
    const AbelianStats s = abelian_stats(g);
    EXPECT_LE(s.m, g.order() / p) << e.spec;
    bool index_p = false;
    for (const auto& w : s.max_order_witnesses) {
      if (w.order() * p == g.order()) index_p = true;
    }
    EXPECT_EQ(index_p, s.m == g.order() / p) << e.spec;
    for (const auto& w : s.max_order_witnesses) {
      if (w.order() * p == g.order()) {
        EXPECT_TRUE(is_normal(g, w)) << e.spec;
      }
    }
  }
}

TEST(AbelianLattice, ExtraspecialShape) {
  const struct {
    const char* spec;
    std::uint64_t p;
  } cases[] = {{"dihedral(4)", 2}, {"quaternion8", 2}, {"heisenberg(3)", 3}};
  for (const auto& c : cases) {
    const FiniteGroup g = G(c.spec);
    const AbelianStats s = abelian_stats(g);
    EXPECT_EQ(s.n_max, c.p + 1) << c.spec;
    EXPECT_EQ(s.maximal_count, c.p + 1) << c.spec;
    for (std::size_t i = 0; i < s.maximal_witnesses.size(); ++i) {
      for (std::size_t j = i + 1; j < s.maximal_witnesses.size(); ++j) {
        EXPECT_LE((s.maximal_witnesses[i].members & s.maximal_witnesses[j].members).count(), c.p) << c.spec;
      }
    }
  }
}

TEST(AbelianLattice, OrderCap) {
  try {
    enumerate_abelian_subgroups(G("symmetric(4)"), LatticeOptions{.order_cap = 12});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderCap);
  }
}

}  // namespace
}  // namespace hcomm
