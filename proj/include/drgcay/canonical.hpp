#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drgcay/graph.hpp"
#include "drgcay/permutation_group.hpp"

namespace drgcay {

struct CanonicalForm {
  // labeling[v] is the position of vertex v in the canonical order.
  Perm labeling;
  // graph6 of relabel(g, labeling); equal iff the graphs are isomorphic.
  std::string certificate;
  // Automorphisms found during the search; they generate Aut(g).
  std::vector<Perm> automorphism_generators;
};

// Partition refinement with individualization and backtracking. Throws
// std::invalid_argument for n > 1000.
CanonicalForm canonical_form(const Graph& g);

// A vertex map h with g2.adjacent(h[u], h[v]) == g1.adjacent(u, v), verified
// edge by edge, or nullopt.
std::optional<Perm> are_isomorphic(const Graph& g1, const Graph& g2);

bool is_automorphism(const Graph& g, const Perm& p);

// Throws std::invalid_argument for n > 700. `base_prefix` is passed to the
// stabilizer chain.
PermutationGroup automorphism_group(const Graph& g, std::vector<int> base_prefix = {});

struct OrbitReport {
  // Orbit id per vertex and per edge (edges in Graph::edges() order); ids
  // numbered by first occurrence.
  std::vector<int> vertex_orbit;
  std::vector<int> edge_orbit;
  int vertex_orbit_count = 0;
  int edge_orbit_count = 0;
  bool vertex_transitive = false;
  bool edge_transitive = false;
};

OrbitReport orbits(const Graph& g, const PermutationGroup& group);

}  // namespace drgcay
