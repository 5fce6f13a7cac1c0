#include "drgcay/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace drgcay {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), nbrs_(n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (adj_[index(u, v)]) return;
  adj_[index(u, v)] = adj_[index(v, u)] = 1;
  nbrs_[u].insert(std::lower_bound(nbrs_[u].begin(), nbrs_[u].end(), v), v);
  nbrs_[v].insert(std::lower_bound(nbrs_[v].begin(), nbrs_[v].end(), u), u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !adj_[index(u, v)]) return;
  adj_[index(u, v)] = adj_[index(v, u)] = 0;
  nbrs_[u].erase(std::lower_bound(nbrs_[u].begin(), nbrs_[u].end(), v));
  nbrs_[v].erase(std::lower_bound(nbrs_[v].begin(), nbrs_[v].end(), u));
  --m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : nbrs_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
    throw std::invalid_argument("label count must match vertex count");
  }
  labels_ = std::move(labels);
}

Graph cayley_graph(const FiniteGroup& g, const ConnectionSet& s) {
  if (s.host_order() != g.order()) throw std::invalid_argument("connection set belongs to a different group");
  const int n = g.order();
  Graph out(n);
  for (int i = 0; i < n; ++i) {
    for (int x : s.elements()) {
      // i * j^-1 = x  <=>  j = x^-1 * i
      const int j = g.mul(g.inv(x), i);
      if (i < j) out.add_edge(i, j);
    }
  }
  return out;
}

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  Graph out(m);
  // Edges incident with each vertex, as indices into `edges`.
  std::vector<std::vector<int>> incident(g.order());
  for (int e = 0; e < m; ++e) {
    incident[edges[e].first].push_back(e);
    incident[edges[e].second].push_back(e);
  }
  for (const auto& star : incident) {
    for (std::size_t i = 0; i < star.size(); ++i)
      for (std::size_t j = i + 1; j < star.size(); ++j) out.add_edge(star[i], star[j]);
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& [u, v] : edges) labels.push_back(std::to_string(u) + "-" + std::to_string(v));
  out.set_labels(std::move(labels));
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  out.set_labels(g.labels());
  return out;
}

Graph seidel_switch(const Graph& g, const std::vector<int>& w) {
  std::vector<char> in(g.order(), 0);
  for (int v : w) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("switching set vertex out of range");
    in[v] = 1;
  }
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      const bool flip = in[u] != in[v];
      if (g.adjacent(u, v) != flip) out.add_edge(u, v);
    }
  }
  out.set_labels(g.labels());
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("relabel: permutation size mismatch");
  Graph out(g.order());
  for (const auto& [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  Graph out(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

}  // namespace drgcay
