#include "drgcay/metrics.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace drgcay {

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  std::vector<int> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> out(static_cast<std::size_t>(n) * n);
  for (int v = 0; v < n; ++v) {
    const auto d = bfs_distances(g, v);
    std::copy(d.begin(), d.end(), out.begin() + static_cast<std::ptrdiff_t>(v) * n);
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const int k = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  return k;
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

std::optional<int> girth(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  const int n = g.order();
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      if (2 * dist[u] >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

int clique_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  int best = 1;
  // Candidates ordered by degree (descending) for a stronger initial bound.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

  std::function<void(std::vector<int>&, int)> expand = [&](std::vector<int>& cand, int size) {
    // Greedy colouring: colour classes are independent sets, so a clique uses
    // at most one vertex per class.
    std::vector<std::vector<int>> classes;
    std::vector<int> colored;
    std::vector<int> bound;
    for (int v : cand) {
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (int u : classes[c]) {
          if (g.adjacent(u, v)) {
            clash = true;
            break;
          }
        }
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (int v : classes[c]) {
        colored.push_back(v);
        bound.push_back(static_cast<int>(c) + 1);
      }
    }
    for (int i = static_cast<int>(colored.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best) return;
      const int v = colored[i];
      std::vector<int> next;
      for (int j = 0; j < i; ++j) {
        if (g.adjacent(v, colored[j])) next.push_back(colored[j]);
      }
      if (next.empty()) {
        best = std::max(best, size + 1);
      } else {
        expand(next, size + 1);
      }
    }
  };
  expand(order, 0);
  return best;
}

std::vector<std::vector<int>> maximal_cliques(const Graph& g, const std::vector<int>& within) {
  std::vector<int> universe = within;
  if (universe.empty()) {
    universe.resize(g.order());
    for (int i = 0; i < g.order(); ++i) universe[i] = i;
  }
  std::sort(universe.begin(), universe.end());
  std::vector<std::vector<int>> out;
  std::vector<int> r;
  std::function<void(std::vector<int>, std::vector<int>)> bron_kerbosch = [&](std::vector<int> p,
                                                                              std::vector<int> x) {
    if (p.empty() && x.empty()) {
      auto clique = r;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
      return;
    }
    // Pivot maximizing |P ∩ N(u)|.
    int pivot = -1, best = -1;
    for (const auto* set : {&p, &x}) {
      for (int u : *set) {
        int cnt = 0;
        for (int v : p) cnt += g.adjacent(u, v);
        if (cnt > best) {
          best = cnt;
          pivot = u;
        }
      }
    }
    std::vector<int> todo;
    for (int v : p) {
      if (!g.adjacent(pivot, v)) todo.push_back(v);
    }
    for (int v : todo) {
      std::vector<int> np, nx;
      for (int u : p)
        if (g.adjacent(u, v)) np.push_back(u);
      for (int u : x)
        if (g.adjacent(u, v)) nx.push_back(u);
      r.push_back(v);
      bron_kerbosch(std::move(np), std::move(nx));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  bron_kerbosch(universe, {});
  std::sort(out.begin(), out.end());
  return out;
}

GraphMetrics metrics(const Graph& g, bool with_clique, bool force_clique) {
  GraphMetrics m;
  m.order = g.order();
  m.size = g.size();
  m.connected = is_connected(g);
  m.bipartite = is_bipartite(g);
  m.regular_degree = regular_degree(g);
  m.diameter = m.connected ? diameter(g) : std::nullopt;
  m.girth = girth(g);
  if (force_clique || (with_clique && g.order() <= 100)) m.clique_number = clique_number(g);
  return m;
}

}  // namespace drgcay
