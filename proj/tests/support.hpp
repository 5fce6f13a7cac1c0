#pragma once

// Independent oracles and random generators shared by the unit tests and the
// acceptance binary. Oracles avoid the library routine they check.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "drgcay/canonical.hpp"
#include "drgcay/graph.hpp"
#include "drgcay/group.hpp"
#include "drgcay/metrics.hpp"

namespace drgcay::testing {

using Rng = std::mt19937_64;

// (v, k, lambda, mu) by counting common neighbours of every pair through the
// neighbour lists, O(v^2 k). nullopt unless regular, non-complete, with
// constant counts on edges and on non-edges and mu > 0.
inline std::optional<std::tuple<int, int, int, int>> srg_oracle(const Graph& g) {
  const int v = g.order();
  if (v < 3) return std::nullopt;
  const int k = g.degree(0);
  for (int x = 0; x < v; ++x) {
    if (g.degree(x) != k) return std::nullopt;
  }
  if (k == v - 1) return std::nullopt;
  std::vector<char> mark(v, 0);
  int lambda = -1, mu = -1;
  for (int x = 0; x < v; ++x) {
    for (int y : g.neighbors(x)) mark[y] = 1;
    for (int y = x + 1; y < v; ++y) {
      int common = 0;
      for (int z : g.neighbors(y)) common += mark[z];
      int& slot = mark[y] ? lambda : mu;
      if (slot < 0) slot = common;
      if (slot != common) return std::nullopt;
    }
    for (int y : g.neighbors(x)) mark[y] = 0;
  }
  if (mu <= 0) return std::nullopt;
  return std::make_tuple(v, k, lambda, mu);
}

// Automorphism count over all n! vertex permutations.
inline long long brute_force_aut_count(const Graph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  const auto edges = g.edges();
  long long count = 0;
  do {
    bool ok = true;
    for (const auto& [u, v] : edges) {
      if (!g.adjacent(p[u], p[v])) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Configuration model with rejection until simple and connected; n * k even.
inline Graph random_regular_connected(int n, int k, Rng& rng) {
  while (true) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), k, v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    Graph g(n);
    bool simple = true;
    for (std::size_t i = 0; simple && i < stubs.size(); i += 2) {
      const int u = stubs[i], v = stubs[i + 1];
      simple = u != v && !g.adjacent(u, v);
      if (simple) g.add_edge(u, v);
    }
    if (simple && is_connected(g)) return g;
  }
}

// Group specs covering every family constructor.
inline const std::vector<std::string>& group_specs() {
  static const std::vector<std::string> specs = {
      "Z1",        "Z2",        "Z6",        "Z12",       "Z4xZ4",     "Z2xZ3xZ2", "E(2,3)",     "E(3,2)",
      "SD(7,3,2)", "SD(9,3,7)", "SD(5,4,2)", "SD(4,2,3)", "SD(6,2,5)", "SD(3,4,2)", "SD(4,4,3)", "HEIS(3)",
      "AFFSQ(7)",  "AFFSQ(11)", "AFFSQ(9)",  "Z3xSD(3,2,2)", "SD(13,3,3)", "Z5xZ5",
  };
  return specs;
}

inline FiniteGroup random_group(Rng& rng) {
  const auto& specs = group_specs();
  std::uniform_int_distribution<std::size_t> pick(0, specs.size() - 1);
  return parse_group_spec(specs[pick(rng)]);
}

// Inverse-closed subset of G \ {e}, each inverse pair kept with probability p.
inline std::vector<int> random_connection_set(const FiniteGroup& g, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<int> s;
  for (int x = 1; x < g.order(); ++x) {
    const int y = g.inv(x);
    if (y < x) continue;
    if (coin(rng)) {
      s.push_back(x);
      if (y != x) s.push_back(y);
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

// n is an "abelian number": every group of order n is abelian. Classical
// criterion: n is cube-free and no prime p dividing n divides q^a - 1 for a
// prime power q^a exactly dividing n.
inline bool abelian_number(long long n) {
  std::vector<std::pair<long long, int>> f;
  long long m = n;
  for (long long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) f.emplace_back(p, e);
  }
  if (m > 1) f.emplace_back(m, 1);
  for (const auto& [p, e] : f) {
    if (e >= 3) return false;
  }
  for (const auto& [p, ep] : f) {
    for (const auto& [q, eq] : f) {
      long long qa = 1;
      for (int i = 0; i < eq; ++i) qa *= q;
      if (p != q && (qa - 1) % p == 0) return false;
    }
  }
  return true;
}

}  // namespace drgcay::testing
