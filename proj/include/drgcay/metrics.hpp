#pragma once

#include <optional>
#include <vector>

#include "drgcay/graph.hpp"

namespace drgcay {

// Unreachable vertices get distance -1.
std::vector<int> bfs_distances(const Graph& g, int source);
// Row-major n x n distance matrix (-1 for unreachable pairs).
std::vector<int> distance_matrix(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
std::optional<int> regular_degree(const Graph& g);
// nullopt means infinite (disconnected, or acyclic for girth).
std::optional<int> diameter(const Graph& g);
std::optional<int> girth(const Graph& g);
// Branch and bound with a greedy colouring bound.
int clique_number(const Graph& g);
// Every maximal clique, each sorted, in lexicographic order (Bron-Kerbosch
// with pivoting). Restricted to `within` when non-empty.
std::vector<std::vector<int>> maximal_cliques(const Graph& g, const std::vector<int>& within = {});

struct GraphMetrics {
  int order = 0;
  int size = 0;
  bool connected = false;
  bool bipartite = false;
  std::optional<int> regular_degree;
  std::optional<int> diameter;
  std::optional<int> girth;
  std::optional<int> clique_number;
};

// The clique number is computed only when requested and n <= 100, or when
// forced.
GraphMetrics metrics(const Graph& g, bool with_clique = false, bool force_clique = false);

}  // namespace drgcay
