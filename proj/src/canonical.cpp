#include "drgcay/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "drgcay/graph6.hpp"

namespace drgcay {
namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  // splitmix64 finalizer over the running state.
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

// Colours are cell indices 0..cells-1; cells are ordered, so colour order is
// part of the (label-invariant) partition.
struct Partition {
  std::vector<int> colour;
  int cells = 0;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()), words_((n_ + 63) / 64) {}

  void run() {
    Partition root;
    root.colour.assign(n_, 0);
    root.cells = n_ > 0 ? 1 : 0;
    std::vector<std::uint64_t> trace{refine(root)};
    std::vector<int> path;
    visit(root, trace, path);
  }

  Perm best_labeling() const { return best_lab_; }
  const std::vector<Perm>& generators() const { return generators_; }

 private:
  static constexpr int kNoJump = std::numeric_limits<int>::max();

  // Iterates (colour, sorted neighbour colours) re-ranking to a fixpoint and
  // returns a hash of the observed keys.
  std::uint64_t refine(Partition& p) const {
    std::uint64_t h = 0x2545f4914f6cdd1dULL;
    std::vector<std::vector<int>> keys(n_);
    std::vector<int> order(n_);
    while (p.cells < n_) {
      for (int v = 0; v < n_; ++v) {
        auto& k = keys[v];
        k.clear();
        for (int w : g_.neighbors(v)) k.push_back(p.colour[w]);
        std::sort(k.begin(), k.end());
      }
      std::iota(order.begin(), order.end(), 0);
      auto less = [&](int a, int b) {
        if (p.colour[a] != p.colour[b]) return p.colour[a] < p.colour[b];
        return keys[a] < keys[b];
      };
      std::sort(order.begin(), order.end(), [&](int a, int b) { return less(a, b) || (!less(b, a) && a < b); });
      std::vector<int> next(n_);
      int rank = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && less(order[i - 1], order[i])) {
          ++rank;
        }
        if (i == 0 || less(order[i - 1], order[i])) {
          const int v = order[i];
          h = mix(h, static_cast<std::uint64_t>(p.colour[v]));
          for (int c : keys[v]) h = mix(h, static_cast<std::uint64_t>(c) + 1);
        }
        next[order[i]] = rank;
      }
      const int cells = rank + 1;
      h = mix(h, static_cast<std::uint64_t>(cells));
      p.colour.swap(next);
      if (cells == p.cells) break;
      p.cells = cells;
    }
    return h;
  }

  static Partition individualize(const Partition& p, int w) {
    Partition q;
    q.colour.resize(p.colour.size());
    const int t = p.colour[w];
    for (std::size_t u = 0; u < p.colour.size(); ++u) {
      const int c = p.colour[u];
      q.colour[u] = c + (c > t || (c == t && static_cast<int>(u) != w) ? 1 : 0);
    }
    q.cells = p.cells + 1;
    return q;
  }

  std::vector<std::uint64_t> leaf_graph(const Partition& p) const {
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(n_) * words_, 0);
    for (int u = 0; u < n_; ++u) {
      const std::size_t row = static_cast<std::size_t>(p.colour[u]) * words_;
      for (int v : g_.neighbors(u)) {
        const int c = p.colour[v];
        bits[row + c / 64] |= std::uint64_t{1} << (c % 64);
      }
    }
    return bits;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int i = 0;
    while (i < static_cast<int>(a.size()) && i < static_cast<int>(b.size()) && a[i] == b[i]) ++i;
    return i;
  }

  static bool prefix_equal(const std::vector<std::uint64_t>& t, const std::vector<std::uint64_t>& ref) {
    return t.size() <= ref.size() && std::equal(t.begin(), t.end(), ref.begin());
  }

  // -1: every leaf below is smaller than the best leaf, 0: undecided, 1: larger.
  int compare_to_best(const std::vector<std::uint64_t>& t) const {
    const std::size_t k = std::min(t.size(), best_trace_.size());
    for (std::size_t i = 0; i < k; ++i) {
      if (t[i] != best_trace_[i]) return t[i] < best_trace_[i] ? -1 : 1;
    }
    return t.size() > best_trace_.size() ? 1 : 0;
  }

  Perm labeling_of(const Partition& p) const { return p.colour; }

  int leaf(const Partition& p, const std::vector<std::uint64_t>& trace, const std::vector<int>& path) {
    auto bits = leaf_graph(p);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = labeling_of(p);
      first_inv_ = best_inv_ = inverse(first_lab_);
      first_trace_ = best_trace_ = trace;
      first_graph_ = best_graph_ = std::move(bits);
      first_path_ = best_path_ = path;
      return kNoJump;
    }
    if (trace == first_trace_ && bits == first_graph_) {
      add_automorphism(p, first_inv_);
      return common_prefix(path, first_path_);
    }
    if (trace == best_trace_ && bits == best_graph_) {
      add_automorphism(p, best_inv_);
      return common_prefix(path, best_path_);
    }
    if (std::tie(trace, bits) > std::tie(best_trace_, best_graph_)) {
      best_lab_ = labeling_of(p);
      best_inv_ = inverse(best_lab_);
      best_trace_ = trace;
      best_graph_ = std::move(bits);
      best_path_ = path;
    }
    return kNoJump;
  }

  void add_automorphism(const Partition& p, const Perm& ref_inv) {
    Perm gamma(n_);
    for (int v = 0; v < n_; ++v) gamma[v] = ref_inv[p.colour[v]];
    if (!is_identity(gamma)) generators_.push_back(std::move(gamma));
  }

  // Returns the depth to resume at (kNoJump for a normal return).
  int visit(const Partition& p, const std::vector<std::uint64_t>& trace, std::vector<int>& path) {
    if (p.cells == n_) return leaf(p, trace, path);
    const int depth = static_cast<int>(path.size());

    // First largest non-singleton cell: individualizing there splits most,
    // which keeps incidence structures of planes shallow.
    std::vector<int> sizes(p.cells, 0);
    for (int c : p.colour) ++sizes[c];
    int target = -1;
    for (int c = 0; c < p.cells; ++c) {
      if (sizes[c] > 1 && (target < 0 || sizes[c] > sizes[target])) target = c;
    }
    std::vector<int> cell;
    for (int v = 0; v < n_; ++v) {
      if (p.colour[v] == target) cell.push_back(v);
    }

    // Orbits of the found automorphisms that fix the current path pointwise.
    UnionFind uf(n_);
    std::size_t used = 0;
    auto absorb = [&] {
      for (; used < generators_.size(); ++used) {
        const Perm& gen = generators_[used];
        bool fixes = true;
        for (int x : path) fixes = fixes && gen[x] == x;
        if (!fixes) continue;
        for (int v = 0; v < n_; ++v) uf.unite(v, gen[v]);
      }
    };
    std::vector<int> explored;

    for (int w : cell) {
      absorb();
      const int rw = uf.find(w);
      if (std::any_of(explored.begin(), explored.end(), [&](int v) { return uf.find(v) == rw; })) continue;
      explored.push_back(w);

      Partition child = individualize(p, w);
      auto child_trace = trace;
      child_trace.push_back(refine(child));
      if (have_first_ && !prefix_equal(child_trace, first_trace_) && compare_to_best(child_trace) < 0) continue;
      path.push_back(w);
      const int jump = visit(child, child_trace, path);
      path.pop_back();
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  const Graph& g_;
  int n_;
  std::size_t words_;
  bool have_first_ = false;
  Perm first_lab_, first_inv_, best_lab_, best_inv_;
  std::vector<std::uint64_t> first_trace_, best_trace_;
  std::vector<std::uint64_t> first_graph_, best_graph_;
  std::vector<int> first_path_, best_path_;
  std::vector<Perm> generators_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > 1000) throw std::invalid_argument("canonical_form: at most 1000 vertices supported");
  CanonicalForm out;
  if (g.order() == 0) {
    out.certificate = graph6_encode(g);
    return out;
  }
  Search search(g);
  search.run();
  out.labeling = search.best_labeling();
  out.certificate = graph6_encode(relabel(g, out.labeling));
  out.automorphism_generators = search.generators();
  return out;
}

std::optional<Perm> are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) return std::nullopt;
  const auto c1 = canonical_form(g1);
  const auto c2 = canonical_form(g2);
  if (c1.certificate != c2.certificate) return std::nullopt;
  const Perm inv2 = inverse(c2.labeling);
  Perm h(g1.order());
  for (int u = 0; u < g1.order(); ++u) h[u] = inv2[c1.labeling[u]];
  for (const auto& [u, v] : g1.edges()) {
    if (!g2.adjacent(h[u], h[v])) throw std::logic_error("are_isomorphic: certificate map is not an isomorphism");
  }
  return h;
}

bool is_automorphism(const Graph& g, const Perm& p) {
  if (static_cast<int>(p.size()) != g.order() || !is_permutation(p)) return false;
  for (const auto& [u, v] : g.edges()) {
    if (!g.adjacent(p[u], p[v])) return false;
  }
  return true;
}

PermutationGroup automorphism_group(const Graph& g, std::vector<int> base_prefix) {
  if (g.order() > 700) throw std::invalid_argument("automorphism_group: at most 700 vertices supported");
  if (g.order() == 0) throw std::invalid_argument("automorphism_group: empty graph");
  const auto form = canonical_form(g);
  for (const auto& gen : form.automorphism_generators) {
    if (!is_automorphism(g, gen)) throw std::logic_error("automorphism_group: search produced a non-automorphism");
  }
  return PermutationGroup(g.order(), form.automorphism_generators, std::move(base_prefix));
}

OrbitReport orbits(const Graph& g, const PermutationGroup& group) {
  if (group.degree() != g.order()) throw std::invalid_argument("orbits: group does not act on the vertex set");
  OrbitReport r;
  const int n = g.order();
  UnionFind vertices(n);
  for (const auto& gen : group.generators()) {
    for (int v = 0; v < n; ++v) vertices.unite(v, gen[v]);
  }
  const auto edges = g.edges();
  std::vector<std::vector<int>> edge_index(n);
  auto index_of = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    const auto& row = edge_index[u];
    const auto& nb = g.neighbors(u);
    return row[std::lower_bound(nb.begin(), nb.end(), v) - nb.begin()];
  };
  for (int u = 0; u < n; ++u) edge_index[u].assign(g.neighbors(u).size(), -1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    const auto& nb = g.neighbors(u);
    edge_index[u][std::lower_bound(nb.begin(), nb.end(), v) - nb.begin()] = static_cast<int>(e);
  }
  UnionFind edge_uf(static_cast<int>(edges.size()));
  for (const auto& gen : group.generators()) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      edge_uf.unite(static_cast<int>(e), index_of(gen[edges[e].first], gen[edges[e].second]));
    }
  }
  auto number = [](UnionFind& uf, int count, std::vector<int>& out) {
    std::vector<int> id(count, -1);
    int next = 0;
    out.resize(count);
    for (int x = 0; x < count; ++x) {
      const int root = uf.find(x);
      if (id[root] < 0) id[root] = next++;
      out[x] = id[root];
    }
    return next;
  };
  r.vertex_orbit_count = number(vertices, n, r.vertex_orbit);
  r.edge_orbit_count = number(edge_uf, static_cast<int>(edges.size()), r.edge_orbit);
  r.vertex_transitive = r.vertex_orbit_count == 1;
  r.edge_transitive = r.edge_orbit_count == 1;
  return r;
}

}  // namespace drgcay
