#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "drgcay/spectral.hpp"
#include "support.hpp"

namespace drgcay {
namespace {

void expect_values(const std::vector<double>& got, const std::vector<double>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(got[i], want[i], kReportTolerance) << i;
}

TEST(Jacobi, MatchesLapackStyleSolver) {
  testing::Rng rng(29);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 25;
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = gauss(rng);
    }
    Eigen::VectorXd ours = jacobi_eigenvalues(a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> oracle(a, Eigen::EigenvaluesOnly);
    Eigen::VectorXd ref = oracle.eigenvalues().reverse();
    ASSERT_LT((ours - ref).cwiseAbs().maxCoeff(), 1e-8) << n;
  }
}

TEST(Spectrum, Examples) {
  const auto k2 = spectrum(complete_graph(2));
  ASSERT_EQ(k2.entries.size(), 2u);
  EXPECT_NEAR(k2.entries[0].value, 1, 1e-9);
  EXPECT_NEAR(k2.entries[1].value, -1, 1e-9);

  const auto lh = spectrum(line_graph(heawood_graph()));
  const double r2 = std::sqrt(2.0);
  const std::vector<std::pair<double, int>> want{{4, 1}, {1 + r2, 6}, {1 - r2, 6}, {-2, 8}};
  ASSERT_EQ(lh.entries.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(lh.entries[i].value, want[i].first, kReportTolerance);
    EXPECT_EQ(lh.entries[i].multiplicity, want[i].second);
  }
  EXPECT_TRUE(lh.entries[0].integral);
  EXPECT_FALSE(lh.entries[1].integral);

  const auto a = spectrum(lattice_graph(4)), b = spectrum(shrikhande_graph());
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_NEAR(a.entries[i].value, b.entries[i].value, kReportTolerance);
    EXPECT_EQ(a.entries[i].multiplicity, b.entries[i].multiplicity);
  }
  // Petersen: {3, 1^5, -2^4}.
  const auto p = spectrum(petersen_graph());
  EXPECT_EQ(p.multiplicity_of(1), 5);
  EXPECT_EQ(p.multiplicity_of(-2), 4);
}

TEST(Spectrum, TraceIdentitiesProperty) {
  testing::Rng rng(31);
  std::uniform_int_distribution<int> size(1, 60);
  std::uniform_real_distribution<double> density(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(size(rng), density(rng), rng);
    const auto s = spectrum(g);
    EXPECT_EQ(s.total_multiplicity(), g.order());
    EXPECT_NEAR(s.trace(), 0, 1e-6);
    EXPECT_NEAR(s.trace_of_square(), 2.0 * g.size(), 1e-4 * std::max(1, g.size()));
  }
}

TEST(Srg, Examples) {
  EXPECT_EQ(srg_parameters(complement(folded_cube(5))), (SrgParams{16, 10, 6, 6}));
  EXPECT_EQ(srg_parameters(cycle_graph(5)), (SrgParams{5, 2, 0, 1}));
  EXPECT_FALSE(srg_parameters(complete_graph(5)));
  EXPECT_FALSE(srg_parameters(Graph(5)));
  EXPECT_FALSE(srg_parameters(cycle_graph(6)));
}

// srg_parameters agrees with the independent counting oracle on random
// Cayley graphs, which are often strongly regular at these sizes.
TEST(Srg, AgreesWithCountingOracleProperty) {
  testing::Rng rng(37);
  int srg_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const FiniteGroup g = testing::random_group(rng);
    const Graph cay = cayley_graph(g, ConnectionSet(g, testing::random_connection_set(g, 0.5, rng)));
    const auto ours = srg_parameters(cay);
    const auto oracle = testing::srg_oracle(cay);
    ASSERT_EQ(ours.has_value(), oracle.has_value()) << g.tag();
    if (!ours) continue;
    ++srg_seen;
    EXPECT_EQ(std::make_tuple(ours->v, ours->k, ours->lambda, ours->mu), *oracle);
    EXPECT_TRUE(ours->feasible());
    const auto ia = intersection_array(cay);
    ASSERT_TRUE(ia);
    EXPECT_EQ(*ia, (IntersectionArray{{ours->k, ours->k - ours->lambda - 1}, {1, ours->mu}}));
    const auto spec = spectrum(cay);
    for (double x : ia_eigenvalues(*ia)) EXPECT_TRUE(spec.contains(x)) << x;
  }
  EXPECT_GT(srg_seen, 5);
}

TEST(IntersectionArray, Examples) {
  EXPECT_EQ(intersection_array(line_graph(heawood_graph())), (IntersectionArray{{4, 2, 2}, {1, 1, 2}}));
  const auto tc = intersection_array(line_graph(tutte_coxeter_graph()));
  ASSERT_TRUE(tc);
  EXPECT_EQ(*tc, (IntersectionArray{{4, 2, 2, 2}, {1, 1, 1, 2}}));
  EXPECT_EQ(tc->diameter(), 4);
  EXPECT_EQ(intersection_array(cycle_graph(6)), (IntersectionArray{{2, 1, 1}, {1, 1, 2}}));
  testing::Rng rng(1);
  EXPECT_FALSE(intersection_array(testing::random_regular_connected(12, 3, rng)));  // no cubic DRG on 12 vertices
  Graph two(2);
  EXPECT_THROW(intersection_array(two), std::invalid_argument);
}

TEST(IntersectionArray, QuotientEigenvalues) {
  const double r2 = std::sqrt(2.0), r5 = std::sqrt(5.0);
  expect_values(ia_eigenvalues({{4, 2, 2}, {1, 1, 2}}), {4, 1 + r2, 1 - r2, -2});
  // The pentagon is {2,1;1,1}; {2,1;1,2} is the square.
  expect_values(ia_eigenvalues({{2, 1}, {1, 1}}), {2, (-1 + r5) / 2, (-1 - r5) / 2});
  expect_values(ia_eigenvalues({{2, 1}, {1, 2}}), {2, 0, -2});
  EXPECT_NEAR(ia_eigenvalues({{16, 8, 8}, {1, 1, 2}}).back(), -2, kReportTolerance);
}

TEST(LeastEigenvalue, Examples) {
  EXPECT_TRUE(least_eigenvalue_at_least(lattice_graph(5), -2));
  EXPECT_TRUE(least_eigenvalue_at_least(kneser_graph(5, 2), -2));
  EXPECT_TRUE(least_eigenvalue_at_least(cycle_graph(7), -2));
  EXPECT_FALSE(least_eigenvalue_at_least(complete_bipartite(3), -2));
}

}  // namespace
}  // namespace drgcay
