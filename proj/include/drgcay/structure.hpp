#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "drgcay/graph.hpp"
#include "drgcay/group.hpp"

namespace drgcay {

// Edge partition of a line graph into cliques, each vertex in at most two.
struct KrauszDecomposition {
  std::vector<std::vector<int>> cliques;  // sorted, in lexicographic order
  // Root vertices: one per clique (same index), then one pendant vertex per
  // input vertex lying in a single clique.
  Graph root;
  // embedding[v] = (x, y), x < y: the root edge that input vertex v becomes.
  std::vector<std::pair<int, int>> embedding;
  bool root_bipartite = false;
};

// Returns the decomposition iff g is a line graph. Throws std::invalid_argument
// for n < 4 (where the root is ambiguous) and for disconnected input.
std::optional<KrauszDecomposition> krausz(const Graph& g);

struct ElementVerdict {
  FiniteGroup::Element element;
  bool holds;
  // For the conjugation condition: the witnessing s, if any.
  std::optional<FiniteGroup::Element> witness;
};

struct ConnectionStructureReport {
  int d = 0;
  // Elements a of order 2d in S: is <a> contained in S ∪ {e}?
  std::vector<ElementVerdict> order2d_condition;
  // Elements a of order 2d in S: is there s in S \ {a, a^-1} with s a s^-1 in S?
  std::vector<ElementVerdict> corollary_condition;
  // Maximal cliques of Cay(G, S) through e that are subgroups.
  std::vector<Subgroup> subgroup_cliques;
  // H, K with S = (H ∪ K) \ {e}, H ∩ K = {e}, |H| = |K|.
  std::optional<std::pair<Subgroup, Subgroup>> hk;
  // K (a clique through e) and a with S = (K ∪ Ka) \ {e}.
  std::optional<std::pair<Subgroup, FiniteGroup::Element>> coset_form;
};

// Throws std::invalid_argument for d < 2.
ConnectionStructureReport connection_structure(const FiniteGroup& g, const ConnectionSet& s, int d);

struct LatticeCheck {
  Graph graph;  // Cay(G, (H ∪ K) \ {e})
  bool general_product = false;
  bool isomorphic_to_lattice = false;
  // general_product <=> isomorphic_to_lattice
  bool consistent = false;
};

// Throws std::invalid_argument if |H| != |K| or either is not a subgroup.
LatticeCheck lattice_check(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

// n = |G|/2 iff S = G \ <a> for an involution a; also asserts
// Cay(G, S) ≅ CP(n) (std::logic_error otherwise).
std::optional<int> cocktail_check(const FiniteGroup& g, const ConnectionSet& s);

struct GodsilTriangular {
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const ConnectionSet> connection_set;
  Graph graph;
};

// G = AFFSQ(q), S = maps T != id with T(0) or T(1) in {0, 1}. Requires
// q ≡ 3 (mod 4), q <= 27; asserts |S| = 2(q-2) and Cay(G, S) ≅ T(q).
GodsilTriangular godsil_triangular(int q);

}  // namespace drgcay
