#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <string>

#include "drgcay/graph.hpp"
#include "drgcay/group.hpp"
#include "drgcay/permutation_group.hpp"

namespace drgcay {

// Witness that a graph is a Cayley graph: g.adjacent(u, v) iff
// cayley_graph(group, connection_set).adjacent(isomorphism[u], isomorphism[v]).
struct CayleyCertificate {
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const ConnectionSet> connection_set;
  Perm isomorphism;
};

// Re-checks the bijection edge by edge in O(n |S|).
bool verify_certificate(const Graph& g, const CayleyCertificate& cert);

enum class SearchStatus { found, none, timeout };

struct RegularSubgroupResult {
  SearchStatus status = SearchStatus::none;
  std::optional<CayleyCertificate> certificate;
  // Search nodes (candidate closures) examined.
  long long nodes = 0;
  // Why "none" holds without a search, if it does.
  std::string shortcut;
};

// Looks for a subgroup of `aut` acting regularly on the vertices of g.
// `aut` must be Aut(g) with vertex 0 as its first base point. "none" is the
// result of an exhaustive search; running past `budget` gives "timeout".
RegularSubgroupResult regular_subgroup_search(const Graph& g, const PermutationGroup& aut,
                                              std::chrono::milliseconds budget);

// Builds the certificate for a regular group given by one element per
// vertex: elements[v] maps vertex 0 to v.
CayleyCertificate certificate_from_regular_group(const Graph& g, const std::vector<Perm>& elements);

}  // namespace drgcay
