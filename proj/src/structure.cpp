#include "drgcay/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "drgcay/canonical.hpp"
#include "drgcay/field.hpp"
#include "drgcay/metrics.hpp"

namespace drgcay {
namespace {

// Krausz state: covered edges and clique count per vertex.
struct KrauszState {
  int n = 0;
  std::vector<char> covered;  // n x n
  std::vector<int> count;
  std::vector<std::vector<int>> cliques;

  bool is_covered(int u, int v) const { return covered[static_cast<std::size_t>(u) * n + v] != 0; }

  // Adds clique c; fails if it reuses a covered edge or overloads a vertex.
  bool add(const Graph& g, const std::vector<int>& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (count[c[i]] >= 2) return false;
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (!g.adjacent(c[i], c[j]) || is_covered(c[i], c[j])) return false;
      }
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      ++count[c[i]];
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        covered[static_cast<std::size_t>(c[i]) * n + c[j]] = 1;
        covered[static_cast<std::size_t>(c[j]) * n + c[i]] = 1;
      }
    }
    cliques.push_back(c);
    return true;
  }

  std::vector<int> uncovered_neighbors(const Graph& g, int x) const {
    std::vector<int> out;
    for (int w : g.neighbors(x)) {
      if (!is_covered(x, w)) out.push_back(w);
    }
    return out;
  }
};

// Once a vertex lies in one clique, its remaining edges must form the second.
bool propagate(const Graph& g, KrauszState& st, std::vector<int> queue) {
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    auto rest = st.uncovered_neighbors(g, x);
    if (rest.empty()) continue;
    if (st.count[x] >= 2) return false;
    rest.push_back(x);
    std::sort(rest.begin(), rest.end());
    if (!st.add(g, rest)) return false;
    for (int w : rest) queue.push_back(w);
  }
  for (int x = 0; x < st.n; ++x) {
    if (!st.uncovered_neighbors(g, x).empty()) return false;
  }
  return true;
}

// Splits N(x) into two cliques: the 2-colourings of the complement of G[N(x)].
std::optional<std::vector<std::vector<int>>> neighbourhood_components(const Graph& g, int x) {
  const auto& nb = g.neighbors(x);
  const int k = static_cast<int>(nb.size());
  std::vector<int> side(k, -1);
  std::vector<std::vector<int>> components;  // entries: index*2 + side
  for (int s = 0; s < k; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> queue{s};
    std::vector<int> comp;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int i = queue[head];
      comp.push_back(i * 2 + side[i]);
      for (int j = 0; j < k; ++j) {
        if (j == i || g.adjacent(nb[i], nb[j])) continue;
        if (side[j] < 0) {
          side[j] = 1 - side[i];
          queue.push_back(j);
        } else if (side[j] == side[i]) {
          return std::nullopt;
        }
      }
    }
    components.push_back(std::move(comp));
  }
  return components;
}

}  // namespace

std::optional<KrauszDecomposition> krausz(const Graph& g) {
  const int n = g.order();
  if (n < 4) {
    throw std::invalid_argument(
        "krausz: fewer than 4 vertices; the root is ambiguous (K3 is the line graph of both K3 and K1,3)");
  }
  if (!is_connected(g)) throw std::invalid_argument("krausz: graph must be connected");

  // Start at the vertex whose neighbourhood split has the fewest choices.
  int start = -1;
  std::vector<std::vector<int>> start_components;
  for (int x = 0; x < n; ++x) {
    auto comps = neighbourhood_components(g, x);
    if (!comps) return std::nullopt;
    if (start < 0 || comps->size() < start_components.size()) {
      start = x;
      start_components = std::move(*comps);
    }
  }
  const auto& nb = g.neighbors(start);
  const std::size_t ncomp = start_components.size();
  // Splits are tried in mask order, so every singleton component starts on
  // the first clique (which settles complete graphs immediately).
  constexpr std::uint64_t kMaxSplits = std::uint64_t{1} << 20;
  const std::uint64_t splits = ncomp - 1 >= 20 ? kMaxSplits : std::uint64_t{1} << (ncomp - 1);

  std::optional<KrauszState> solved;
  // Component 0 is fixed to its first colouring; the two cliques are symmetric.
  for (std::uint64_t mask = 0; mask < splits && !solved; ++mask) {
    std::vector<int> a{start}, b{start};
    for (std::size_t c = 0; c < ncomp; ++c) {
      const bool flip = c > 0 && ((mask >> (c - 1)) & 1);
      for (int code : start_components[c]) {
        const int side = (code & 1) ^ (flip ? 1 : 0);
        (side == 0 ? a : b).push_back(nb[code / 2]);
      }
    }
    KrauszState st;
    st.n = n;
    st.covered.assign(static_cast<std::size_t>(n) * n, 0);
    st.count.assign(n, 0);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (!st.add(g, a)) continue;
    if (b.size() > 1 && !st.add(g, b)) continue;
    std::vector<int> queue(a.begin(), a.end());
    queue.insert(queue.end(), b.begin(), b.end());
    if (propagate(g, st, queue)) solved = std::move(st);
  }
  if (!solved && ncomp - 1 > 20) throw std::runtime_error("krausz: neighbourhood split has too many choices");
  if (!solved) return std::nullopt;

  KrauszDecomposition out;
  out.cliques = solved->cliques;
  std::sort(out.cliques.begin(), out.cliques.end());
  std::vector<std::vector<int>> member_of(n);
  for (std::size_t c = 0; c < out.cliques.size(); ++c) {
    for (int v : out.cliques[c]) member_of[v].push_back(static_cast<int>(c));
  }
  int root_n = static_cast<int>(out.cliques.size());
  out.embedding.resize(n);
  for (int v = 0; v < n; ++v) {
    if (member_of[v].size() == 2) {
      out.embedding[v] = {member_of[v][0], member_of[v][1]};
    } else {
      out.embedding[v] = {member_of[v][0], root_n++};
    }
  }
  out.root = Graph(root_n);
  for (const auto& [x, y] : out.embedding) {
    if (out.root.adjacent(x, y)) throw std::logic_error("krausz: two vertices map to the same root edge");
    out.root.add_edge(x, y);
  }
  // The embedding must be a line-graph isomorphism.
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const auto [a, b] = out.embedding[u];
      const auto [c, d] = out.embedding[v];
      const bool share = a == c || a == d || b == c || b == d;
      if (share != g.adjacent(u, v)) throw std::logic_error("krausz: root does not reproduce the input");
    }
  }
  out.root_bipartite = is_bipartite(out.root);
  return out;
}

ConnectionStructureReport connection_structure(const FiniteGroup& g, const ConnectionSet& s, int d) {
  if (d < 2) throw std::invalid_argument("connection_structure: d must be at least 2");
  if (s.host_order() != g.order()) throw std::invalid_argument("connection_structure: set belongs to another group");
  ConnectionStructureReport r;
  r.d = d;
  for (auto a : s.elements()) {
    if (g.element_order(a) != 2 * d) continue;
    bool inside = true;
    for (int i = 1; i < 2 * d; ++i) inside = inside && s.contains(g.pow(a, i));
    r.order2d_condition.push_back({a, inside, std::nullopt});
    ElementVerdict cor{a, false, std::nullopt};
    for (auto x : s.elements()) {
      if (x == a || x == g.inv(a)) continue;
      if (s.contains(g.conj(x, a))) {
        cor.holds = true;
        cor.witness = x;
        break;
      }
    }
    r.corollary_condition.push_back(cor);
  }

  // Cliques through e: maximal cliques of Cay(G, S) restricted to S, plus e.
  const Graph cay = cayley_graph(g, s);
  std::vector<Subgroup> through_e;
  if (s.size() > 0) {
    for (auto c : maximal_cliques(cay, s.elements())) {
      c.push_back(g.identity());
      std::sort(c.begin(), c.end());
      through_e.push_back(std::move(c));
    }
  }
  for (const auto& c : through_e) {
    if (is_subgroup(g, c)) r.subgroup_cliques.push_back(c);
  }
  for (std::size_t i = 0; i < r.subgroup_cliques.size() && !r.hk; ++i) {
    for (std::size_t j = i + 1; j < r.subgroup_cliques.size(); ++j) {
      const auto& h = r.subgroup_cliques[i];
      const auto& k = r.subgroup_cliques[j];
      if (h.size() != k.size()) continue;
      std::vector<int> meet, join;
      std::set_intersection(h.begin(), h.end(), k.begin(), k.end(), std::back_inserter(meet));
      if (meet.size() != 1) continue;
      std::set_union(h.begin(), h.end(), k.begin(), k.end(), std::back_inserter(join));
      if (join.size() == s.size() + 1) {
        r.hk = std::make_pair(h, k);
        break;
      }
    }
  }

  std::vector<int> target = s.elements();
  std::sort(target.begin(), target.end());
  for (const auto& k : through_e) {
    if (k.size() < 2) continue;
    for (int a = 0; a < g.order() && !r.coset_form; ++a) {
      std::vector<int> u;
      for (auto x : k) {
        if (x != g.identity()) u.push_back(x);
        const auto y = g.mul(x, a);
        if (y != g.identity()) u.push_back(y);
      }
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
      if (u == target) r.coset_form = std::make_pair(k, a);
    }
    if (r.coset_form) break;
  }
  return r;
}

LatticeCheck lattice_check(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  if (h.size() != k.size()) throw std::invalid_argument("lattice_check: |H| and |K| differ");
  if (!is_subgroup(g, h) || !is_subgroup(g, k)) throw std::invalid_argument("lattice_check: inputs must be subgroups");
  std::vector<int> s;
  for (auto x : h) {
    if (x != g.identity()) s.push_back(x);
  }
  for (auto x : k) {
    if (x != g.identity() && std::find(s.begin(), s.end(), x) == s.end()) s.push_back(x);
  }
  LatticeCheck out;
  out.graph = cayley_graph(g, ConnectionSet(g, s));
  out.general_product = is_general_product(g, h, k);
  const int n = static_cast<int>(h.size());
  out.isomorphic_to_lattice = n * n == g.order() && are_isomorphic(out.graph, lattice_graph(n)).has_value();
  out.consistent = out.general_product == out.isomorphic_to_lattice;
  return out;
}

std::optional<int> cocktail_check(const FiniteGroup& g, const ConnectionSet& s) {
  if (g.order() % 2 != 0 || static_cast<int>(s.size()) != g.order() - 2) return std::nullopt;
  for (int a = 1; a < g.order(); ++a) {
    if (g.element_order(a) != 2 || s.contains(a)) continue;
    // |S| = |G| - 2 and e, a are both outside S, so S = G \ <a>.
    const int n = g.order() / 2;
    if (!are_isomorphic(cayley_graph(g, s), cocktail_party(n))) {
      throw std::logic_error("cocktail_check: Cay(G, G \\ <a>) is not a cocktail party graph");
    }
    return n;
  }
  return std::nullopt;
}

GodsilTriangular godsil_triangular(int q) {
  if (q % 4 != 3) throw std::invalid_argument("godsil_triangular: q must be 3 mod 4");
  if (q > 27) throw std::invalid_argument("godsil_triangular: q must be at most 27");
  const auto pk = prime_power(q);
  if (!pk) throw std::invalid_argument("godsil_triangular: q must be a prime power");
  FiniteField f(pk->first, pk->second);
  const auto squares = nonzero_squares(f);
  auto group = std::make_shared<FiniteGroup>(affine_square(q));
  std::vector<int> s;
  for (int u = 1; u < group->order(); ++u) {
    // Element u is x -> a x + b.
    const int a = squares[u / q], b = u % q;
    const int at0 = b, at1 = f.add(a, b);
    if (at0 <= 1 || at1 <= 1) s.push_back(u);
  }
  auto conn = std::make_shared<ConnectionSet>(*group, s);
  if (static_cast<int>(conn->size()) != 2 * (q - 2)) throw std::logic_error("godsil_triangular: |S| != 2(q-2)");
  Graph graph = cayley_graph(*group, *conn);
  if (!are_isomorphic(graph, triangular_graph(q))) throw std::logic_error("godsil_triangular: graph is not T(q)");
  return {group, conn, std::move(graph)};
}

}  // namespace drgcay
