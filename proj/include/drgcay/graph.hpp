#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drgcay/group.hpp"

namespace drgcay {

// Undirected simple graph on vertices 0..n-1.
//
// Stores both a dense adjacency matrix (O(1) adjacency queries) and sorted
// neighbour lists. Optional per-vertex labels record where a vertex came
// from (an edge of a root graph, a subset, a group element, ...).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  int size() const { return m_; }
  bool adjacent(int u, int v) const { return adj_[index(u, v)] != 0; }
  const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
  int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }

  // Throws std::invalid_argument on loops or out-of-range vertices; adding
  // an existing edge is a no-op.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  // Edges as (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  std::size_t index(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<unsigned char> adj_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<std::string> labels_;
};

// Vertex i ~ j iff i * j^-1 is in S.
Graph cayley_graph(const FiniteGroup& g, const ConnectionSet& s);

// Vertices are the edges of g in lexicographic order; labelled "u-v".
Graph line_graph(const Graph& g);
Graph complement(const Graph& g);
// Flips adjacency of every pair with exactly one endpoint in w.
Graph seidel_switch(const Graph& g, const std::vector<int>& w);
// Graph h with h.adjacent(perm[u], perm[v]) == g.adjacent(u, v).
Graph relabel(const Graph& g, const std::vector<int>& perm);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Named families. Vertex orderings are fixed and documented per family.
Graph complete_graph(int n);
// Left part 0..n-1, right part n..2n-1.
Graph complete_bipartite(int n);
Graph cycle_graph(int m);
// Binary labels, vertices adjacent when differing in one bit.
Graph cube_graph(int d);
// (d-1)-cube on 0..2^(d-1)-1 plus v ~ (bitwise complement of v).
Graph folded_cube(int d);
// m-subsets of {0..n-1} in lexicographic order, adjacent when disjoint.
Graph kneser_graph(int n, int m);
// 2-subsets of {0..n-1} in lexicographic order, adjacent when meeting.
Graph triangular_graph(int n);
// (i, j) -> i*n + j, adjacent when sharing a row or a column.
Graph lattice_graph(int n);
// 2n vertices, i ~ j unless {i, j} = {2t, 2t+1}.
Graph cocktail_party(int n);
// Points then lines of PG(2, q): normalized vectors of GF(q)^3 (first
// nonzero coordinate 1) in lexicographic order; incidence is a zero dot
// product.
Graph pg_incidence(int q);
Graph heawood_graph();
// 15 duads of {0..5} (lexicographic) then 15 synthemes (lexicographic),
// incidence by membership.
Graph tutte_coxeter_graph();
// Pentagons P_h (vertex 5h + j) and pentagrams Q_i (vertex 25 + 5i + j);
// P_h[j] ~ Q_i[h*i + j mod 5].
Graph hoffman_singleton_graph();
// Cay(Z4 x Z4, {±(0,1), ±(1,0), ±(1,-1)}), vertex (i, j) -> 4i + j.
Graph shrikhande_graph();
Graph petersen_graph();
// Seidel switching of T(8) on the edges of a spanning subgraph of K8:
// 1 = perfect matching, 2 = triangle + 5-cycle, 3 = 8-cycle.
Graph chang_graph(int which);
// Vertex sets (as T(8) vertex indices) used by chang_graph.
std::vector<int> chang_switching_set(int which);

// Parses a named-graph expression, e.g. "kneser(5,2)", "petersen",
// "line(heawood)", "complement(folded_cube(5))".
Graph named_graph(std::string_view spec);

}  // namespace drgcay
