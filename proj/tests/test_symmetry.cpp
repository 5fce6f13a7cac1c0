#include <gtest/gtest.h>

#include <set>

#include "drgcay/canonical.hpp"
#include "drgcay/permutation_group.hpp"
#include "drgcay/regular_subgroup.hpp"
#include "support.hpp"

namespace drgcay {
namespace {

using namespace std::chrono_literals;

// Group closure by breadth-first multiplication; the oracle for small groups.
std::size_t closure_size(int degree, const std::vector<Perm>& gens) {
  std::set<Perm> seen{identity_perm(degree)};
  std::vector<Perm> queue{identity_perm(degree)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      Perm next = compose(queue[head], g);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen.size();
}

TEST(PermutationGroup, OrderMatchesClosureProperty) {
  testing::Rng rng(41);
  std::uniform_int_distribution<int> count(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const int degree = 3 + trial % 5;
    std::vector<Perm> gens;
    for (int i = count(rng); i > 0; --i) gens.push_back(testing::random_permutation(degree, rng));
    const PermutationGroup g(degree, gens);
    ASSERT_EQ(g.order(), BigInt(closure_size(degree, gens))) << "trial " << trial;
    for (const auto& s : gens) EXPECT_TRUE(g.contains(s));
    // Random words stay inside; a transposition outside A_n is caught when
    // every generator is even.
    Perm w = identity_perm(degree);
    for (int t = 0; t < 20; ++t) w = compose(w, gens[t % gens.size()]);
    EXPECT_TRUE(g.contains(w));
  }
  const PermutationGroup a5(5, {{1, 2, 0, 3, 4}, {0, 1, 3, 4, 2}, {1, 0, 3, 2, 4}});
  EXPECT_EQ(a5.order(), 60);
  EXPECT_FALSE(a5.contains({1, 0, 2, 3, 4}));
}

TEST(PermutationGroup, StabilizerEnumeration) {
  const PermutationGroup s4(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, {0});
  EXPECT_EQ(s4.order(), 24);
  EXPECT_EQ(s4.stabilizer_order(1), 6);
  std::set<Perm> seen;
  s4.for_each_stabilizer_element(1, [&](const Perm& p) {
    EXPECT_EQ(p[0], 0);
    seen.insert(p);
    return true;
  });
  EXPECT_EQ(seen.size(), 6u);
  std::set<Perm> all;
  s4.for_each_stabilizer_element(0, [&](const Perm& p) {
    all.insert(p);
    return true;
  });
  EXPECT_EQ(all.size(), 24u);
}

TEST(Automorphisms, PetersenMatchesBruteForce) {
  const Graph g = petersen_graph();
  EXPECT_EQ(automorphism_group(g).order(), BigInt(testing::brute_force_aut_count(g)));
  EXPECT_EQ(testing::brute_force_aut_count(g), 120);
}

TEST(Automorphisms, SmallGraphsMatchBruteForce) {
  testing::Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(3 + trial % 5, 0.5, rng);
    const auto aut = automorphism_group(g);
    ASSERT_EQ(aut.order(), BigInt(testing::brute_force_aut_count(g))) << trial;
    for (const auto& p : aut.generators()) EXPECT_TRUE(is_automorphism(g, p));
  }
}

TEST(Automorphisms, CatalogOrders) {
  EXPECT_EQ(automorphism_group(chang_graph(1)).order(), 384);
  EXPECT_EQ(automorphism_group(chang_graph(2)).order(), 360);
  EXPECT_EQ(automorphism_group(chang_graph(3)).order(), 96);
  for (int i = 1; i <= 3; ++i) EXPECT_NE(automorphism_group(chang_graph(i)).order() % 28, 0);

  // Tutte-Coxeter: orbit-stabilizer count on the 30 vertices.
  const Graph tc = tutte_coxeter_graph();
  const auto aut = automorphism_group(tc, {0});
  EXPECT_EQ(aut.order(), 1440);
  long long stab = 0;
  aut.for_each_stabilizer_element(1, [&](const Perm& p) {
    EXPECT_TRUE(is_automorphism(tc, p));
    ++stab;
    return true;
  });
  EXPECT_EQ(static_cast<long long>(aut.orbit(0).size()) * stab, 1440);
  EXPECT_EQ(automorphism_group(line_graph(tc)).order(), 1440);
  EXPECT_THROW(automorphism_group(Graph(701)), std::invalid_argument);
}

std::vector<std::pair<std::string, Graph>> catalog_graphs() {
  return {{"petersen", petersen_graph()},
          {"folded_cube(5)", folded_cube(5)},
          {"shrikhande", shrikhande_graph()},
          {"lattice(4)", lattice_graph(4)},
          {"triangular(8)", triangular_graph(8)},
          {"chang(1)", chang_graph(1)},
          {"chang(2)", chang_graph(2)},
          {"chang(3)", chang_graph(3)},
          {"cocktail_party(6)", cocktail_party(6)},
          {"line(heawood)", line_graph(heawood_graph())},
          {"line(petersen)", line_graph(petersen_graph())},
          {"line(tutte_coxeter)", line_graph(tutte_coxeter_graph())},
          {"hoffman_singleton", hoffman_singleton_graph()},
          {"pg_incidence(8)", pg_incidence(8)}};
}

TEST(Canonical, RelabelingInvarianceProperty) {
  testing::Rng rng(47);
  for (const auto& [name, g] : catalog_graphs()) {
    const auto base = canonical_form(g).certificate;
    for (int t = 0; t < 100; ++t) {
      const Graph h = relabel(g, testing::random_permutation(g.order(), rng));
      ASSERT_EQ(canonical_form(h).certificate, base) << name << " trial " << t;
    }
  }
}

TEST(Canonical, RandomGraphInvariance) {
  testing::Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(20, 0.3, rng);
    const Graph h = relabel(g, testing::random_permutation(20, rng));
    const auto map = are_isomorphic(g, h);
    ASSERT_TRUE(map);
    for (const auto& [u, v] : g.edges()) EXPECT_TRUE(h.adjacent((*map)[u], (*map)[v]));
  }
}

TEST(Canonical, Distinguishes) {
  EXPECT_NE(canonical_form(lattice_graph(4)).certificate, canonical_form(shrikhande_graph()).certificate);
  EXPECT_TRUE(are_isomorphic(triangular_graph(4), cocktail_party(3)));
  for (int n = 2; n <= 6; ++n) {
    const FiniteGroup g = direct_product(cyclic_group(n), cyclic_group(n));
    std::vector<int> axes;
    for (int x = 1; x < g.order(); ++x) {
      if (x % n == 0 || x < n) axes.push_back(x);
    }
    EXPECT_TRUE(are_isomorphic(cayley_graph(g, ConnectionSet(g, axes)), lattice_graph(n))) << n;
  }
}

TEST(Orbits, Examples) {
  const Graph h = heawood_graph();
  const auto r = orbits(h, automorphism_group(h));
  EXPECT_TRUE(r.vertex_transitive);
  EXPECT_TRUE(r.edge_transitive);
  const Graph c6 = cycle_graph(6);
  const auto c = orbits(c6, automorphism_group(c6));
  EXPECT_TRUE(c.vertex_transitive && c.edge_transitive);
}

// Edge-transitivity of a regular connected root equals vertex-transitivity
// of its line graph.
TEST(Orbits, EdgeTransitiveIffLineVertexTransitiveProperty) {
  testing::Rng rng(59);
  int positives = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + trial % 3;
    const int n = k == 3 ? 6 + 2 * (trial % 3) : 5 + trial % 4;
    const Graph g = testing::random_regular_connected(n, k, rng);
    const bool et = orbits(g, automorphism_group(g)).edge_transitive;
    const Graph l = line_graph(g);
    const bool lvt = orbits(l, automorphism_group(l)).vertex_transitive;
    EXPECT_EQ(et, lvt) << "trial " << trial;
    positives += et;
  }
  EXPECT_GT(positives, 5);
}

TEST(RegularSubgroup, Examples) {
  const Graph p = petersen_graph();
  EXPECT_EQ(regular_subgroup_search(p, automorphism_group(p, {0}), 60s).status, SearchStatus::none);
  const Graph lp = line_graph(p);
  EXPECT_EQ(regular_subgroup_search(lp, automorphism_group(lp, {0}), 60s).status, SearchStatus::none);
  const Graph sh = shrikhande_graph();
  const auto r = regular_subgroup_search(sh, automorphism_group(sh, {0}), 60s);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_TRUE(verify_certificate(sh, *r.certificate));
  EXPECT_EQ(r.certificate->group->order(), 16);
  // A non-vertex-transitive graph is settled without a search.
  const Graph c = chang_graph(1);
  const auto rc = regular_subgroup_search(c, automorphism_group(c, {0}), 60s);
  EXPECT_EQ(rc.status, SearchStatus::none);
  EXPECT_FALSE(rc.shortcut.empty());
}

Graph copies(const Graph& x, int m) {
  Graph out(x.order() * m);
  for (int i = 0; i < m; ++i) {
    for (const auto& [u, v] : x.edges()) out.add_edge(i * x.order() + u, i * x.order() + v);
  }
  return out;
}

// mX is Cayley iff X is; the search runs on one component.
TEST(RegularSubgroup, DisconnectedGraphs) {
  for (const auto& [x, m] : std::vector<std::pair<Graph, int>>{{cycle_graph(3), 7}, {cycle_graph(5), 3}, {Graph(1), 6}}) {
    const Graph g = copies(x, m);
    const auto r = regular_subgroup_search(g, automorphism_group(g, {0}), 60s);
    ASSERT_EQ(r.status, SearchStatus::found);
    EXPECT_TRUE(verify_certificate(g, *r.certificate));
  }
  const Graph p2 = copies(petersen_graph(), 2);
  EXPECT_EQ(regular_subgroup_search(p2, automorphism_group(p2, {0}), 60s).status, SearchStatus::none);
}

// Every Cayley graph passes the search, its certificate verifies, and its
// right translations lie in Aut.
TEST(RegularSubgroup, CayleyGraphsAreFoundProperty) {
  testing::Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const FiniteGroup g = testing::random_group(rng);
    if (g.order() < 2 || g.order() > 60) continue;
    const Graph cay = cayley_graph(g, ConnectionSet(g, testing::random_connection_set(g, 0.3, rng)));
    const auto aut = automorphism_group(cay, {0});
    for (int t = 0; t < g.order(); ++t) {
      Perm p(g.order());
      for (int x = 0; x < g.order(); ++x) p[x] = g.mul(x, t);
      ASSERT_TRUE(aut.contains(p));
    }
    const auto r = regular_subgroup_search(cay, aut, 60s);
    ASSERT_EQ(r.status, SearchStatus::found) << g.tag();
    EXPECT_TRUE(verify_certificate(cay, *r.certificate));
  }
}

TEST(RegularSubgroup, TimeoutIsDistinct) {
  const Graph l = line_graph(tutte_coxeter_graph());
  const auto r = regular_subgroup_search(l, automorphism_group(l, {0}), 0ms);
  EXPECT_TRUE(r.status == SearchStatus::timeout || r.status == SearchStatus::none);
  EXPECT_NE(r.status, SearchStatus::found);
}

TEST(Certificates, TamperedCertificateFails) {
  const FiniteGroup g = cyclic_group(6);
  auto cg = std::make_shared<FiniteGroup>(g);
  auto s = std::make_shared<ConnectionSet>(g, std::vector<int>{1, 5});
  const Graph c6 = cayley_graph(g, *s);
  CayleyCertificate cert{cg, s, identity_perm(6)};
  EXPECT_TRUE(verify_certificate(c6, cert));
  cert.isomorphism = {1, 0, 2, 3, 4, 5};
  EXPECT_FALSE(verify_certificate(c6, cert));
}

}  // namespace
}  // namespace drgcay
