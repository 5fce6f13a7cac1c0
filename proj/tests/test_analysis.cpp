#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "drgcay/analysis.hpp"
#include "drgcay/field.hpp"
#include "support.hpp"

namespace drgcay {
namespace {

using V = std::vector<std::int64_t>;

TEST(Sylow, Examples) {
  EXPECT_EQ(sylow_candidates(45, 3), V{1});
  EXPECT_EQ(sylow_candidates(45, 5), V{1});
  EXPECT_EQ(sylow_candidates(175, 7), V{1});
  EXPECT_EQ(sylow_candidates(175, 5), V{1});
  EXPECT_EQ(sylow_candidates(12, 2), (V{1, 3}));
  EXPECT_THROW(sylow_candidates(45, 7), std::invalid_argument);
  for (int n = 2; n <= 300; ++n) {
    for (const auto& [p, e] : factorize(n)) {
      const auto c = sylow_candidates(n, p);
      EXPECT_EQ(c.front(), 1);
      for (auto d : c) EXPECT_EQ(d % p, 1);
    }
  }
}

TEST(AllGroupsAbelian, Examples) {
  EXPECT_EQ(all_groups_abelian(15).verdict, Verdict::yes);
  EXPECT_EQ(all_groups_abelian(45).verdict, Verdict::yes);
  EXPECT_EQ(all_groups_abelian(175).verdict, Verdict::yes);
  EXPECT_EQ(all_groups_abelian(21).verdict, Verdict::no);
  EXPECT_EQ(all_groups_abelian(6).verdict, Verdict::no);
  EXPECT_EQ(all_groups_abelian(8).verdict, Verdict::no);
}

// Against the classical criterion, and never "yes" where a nonabelian group
// is constructible.
TEST(AllGroupsAbelian, ConsistencyUpTo100) {
  std::map<int, bool> constructible_nonabelian;
  for (int n = 3; n <= 100; ++n) {
    for (int m = 2; n * m <= 100; ++m) {
      for (int r = 2; r < n; ++r) {
        if (std::gcd(r, n) != 1 || pow_mod(r, m, n) != 1) continue;
        const FiniteGroup g = semidirect(n, m, r);
        ASSERT_FALSE(g.is_abelian());
        for (int k = 1; n * m * k <= 100; ++k) constructible_nonabelian[n * m * k] = true;
      }
    }
  }
  ASSERT_FALSE(heisenberg(3).is_abelian());
  for (int k = 1; 27 * k <= 100; ++k) constructible_nonabelian[27 * k] = true;
  for (int n = 1; n <= 100; ++n) {
    const auto v = all_groups_abelian(n).verdict;
    const bool truth = testing::abelian_number(n);
    if (v == Verdict::yes) {
      EXPECT_TRUE(truth) << n;
    }
    if (v == Verdict::no) {
      EXPECT_FALSE(truth) << n;
    }
    if (constructible_nonabelian[n]) {
      EXPECT_NE(v, Verdict::yes) << n;
    }
    if (truth) {
      EXPECT_FALSE(constructible_nonabelian[n]) << n;
    }
  }
}

TEST(AbelianGroups, Enumeration) {
  std::vector<std::string> names;
  for (const auto& g : abelian_groups(45)) names.push_back(g.name);
  EXPECT_EQ(names, (std::vector<std::string>{"Z45", "Z3xZ15"}));
  EXPECT_EQ(abelian_groups(175).size(), 2u);
  EXPECT_EQ(abelian_groups(8).size(), 3u);
  EXPECT_THROW(abelian_groups(2001), std::invalid_argument);
  // Count = product of partition numbers; element-order profiles distinct.
  const int partitions[] = {1, 1, 2, 3, 5, 7, 11};
  for (int n : {16, 36, 72, 96, 144, 200}) {
    std::size_t expected = 1;
    for (const auto& [p, e] : factorize(n)) expected *= partitions[e];
    const auto groups = abelian_groups(n);
    ASSERT_EQ(groups.size(), expected) << n;
    std::set<std::vector<int>> profiles;
    for (const auto& ag : groups) {
      EXPECT_EQ(ag.group.order(), n);
      EXPECT_TRUE(ag.group.is_abelian());
      std::vector<int> orders;
      for (int x = 0; x < n; ++x) orders.push_back(ag.group.element_order(x));
      std::sort(orders.begin(), orders.end());
      profiles.insert(orders);
    }
    EXPECT_EQ(profiles.size(), expected) << n;
  }
}

TEST(Obstruction, Examples) {
  const auto p = line_graph_abelian_obstruction(petersen_graph());
  EXPECT_TRUE(p.applicable);
  EXPECT_EQ(p.edges, 15);
  EXPECT_EQ(p.vertices, 10);
  EXPECT_EQ(p.steps.size(), 6u);
  EXPECT_EQ(p.conclusion, "L(root) is not a Cayley graph");
  const auto hs = line_graph_abelian_obstruction(hoffman_singleton_graph());
  EXPECT_TRUE(hs.applicable);
  EXPECT_EQ(hs.edges, 175);
  const auto h = line_graph_abelian_obstruction(heawood_graph());
  EXPECT_FALSE(h.applicable);
  EXPECT_EQ(h.conclusion, "inapplicable");
  EXPECT_THROW(line_graph_abelian_obstruction(complete_graph(4)), std::invalid_argument);
  EXPECT_THROW(line_graph_abelian_obstruction(complete_graph(2)), std::invalid_argument);
  EXPECT_THROW(line_graph_abelian_obstruction(Graph(3)), std::invalid_argument);
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  EXPECT_THROW(line_graph_abelian_obstruction(path), std::invalid_argument);
}

TEST(GenerationScan, Examples) {
  const auto s45 = hk_generation_scan(45, 3);
  EXPECT_TRUE(s45.impossible());
  EXPECT_EQ(s45.groups_checked, 2);
  const auto s9 = hk_generation_scan(9, 3);
  EXPECT_FALSE(s9.impossible());
  EXPECT_THROW(hk_generation_scan(21, 3), std::invalid_argument);
  EXPECT_THROW(hk_generation_scan(45, 4), std::invalid_argument);
}

}  // namespace
}  // namespace drgcay
