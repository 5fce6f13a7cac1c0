#include "drgcay/regular_subgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "drgcay/canonical.hpp"

namespace drgcay {
namespace {

struct Timeout {};

class RegularSearch {
 public:
  RegularSearch(const Graph& g, const PermutationGroup& aut, std::chrono::milliseconds budget)
      : g_(g),
        aut_(aut),
        n_(g.order()),
        deadline_(std::chrono::steady_clock::now() + budget),
        transversal_(aut.first_transversal()) {}

  // Returns one element per vertex (element v maps 0 to v) on success.
  std::optional<std::vector<Perm>> run() {
    std::vector<Perm> slots(n_);
    slots[0] = identity_perm(n_);
    return extend({}, slots);
  }

  long long nodes() const { return nodes_; }

 private:
  void check_clock() {
    if ((++ticks_ & 0xff) == 0 && std::chrono::steady_clock::now() > deadline_) throw Timeout{};
  }

  static bool fixed_point_free(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == static_cast<int>(i)) return false;
    }
    return true;
  }

  // Closes <gens> as a semiregular group; slots[v] is the element sending 0
  // to v. Fails when two elements share an image of 0 or an element other than
  // the identity has a fixed point.
  std::optional<std::vector<Perm>> close(const std::vector<Perm>& gens) {
    std::vector<Perm> slots(n_);
    slots[0] = identity_perm(n_);
    std::vector<int> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& s : gens) {
        check_clock();
        Perm y = compose(slots[queue[head]], s);
        const int img = y[0];
        if (slots[img].empty()) {
          if (!fixed_point_free(y)) return std::nullopt;
          slots[img] = std::move(y);
          queue.push_back(img);
        } else if (slots[img] != y) {
          return std::nullopt;
        }
      }
    }
    return slots;
  }

  std::optional<std::vector<Perm>> extend(const std::vector<Perm>& gens, const std::vector<Perm>& slots) {
    ++nodes_;
    int v = 0;
    while (v < n_ && !slots[v].empty()) ++v;
    if (v == n_) return slots;
    // Any regular overgroup contains exactly one element sending 0 to v, and
    // all such automorphisms are h * u_v with h in the stabilizer of 0.
    const Perm& u_v = transversal_[v];
    std::optional<std::vector<Perm>> found;
    aut_.for_each_stabilizer_element(1, [&](const Perm& h) {
      check_clock();
      Perm cand = compose(h, u_v);
      if (!fixed_point_free(cand) || n_ % perm_order(cand) != 0) return true;
      auto next_gens = gens;
      next_gens.push_back(cand);
      auto closed = close(next_gens);
      if (!closed) return true;
      std::vector<int> key;
      for (const auto& p : *closed) {
        if (p.empty()) continue;
        key.insert(key.end(), p.begin(), p.end());
      }
      if (!visited_.insert(std::move(key)).second) return true;
      found = extend(next_gens, *closed);
      return !found.has_value();
    });
    return found;
  }

  const Graph& g_;
  const PermutationGroup& aut_;
  int n_;
  std::chrono::steady_clock::time_point deadline_;
  const std::vector<Perm>& transversal_;
  std::set<std::vector<int>> visited_;
  long long nodes_ = 0;
  unsigned ticks_ = 0;
};

// Vertex sets of the connected components; the first contains vertex 0 and
// each set is sorted.
std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (int w : g.neighbors(members[head])) {
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

// A vertex-transitive graph mX is Cayley iff X is: Cay(H, S) gives
// Cay(H x Z_m, S x {0}), and the stabilizer of a component in a regular group
// acts regularly on it. Lifts regular elements of X (local[y] maps 0 to y) to
// one element per vertex of g.
std::vector<Perm> lift_to_components(const Graph& g, const std::vector<std::vector<int>>& comps,
                                     const std::vector<Perm>& local) {
  const int n = g.order();
  const int m = static_cast<int>(comps.size());
  const Graph x = induced_subgraph(g, comps[0]);
  // phi[i][y]: vertex of component i playing the role of local vertex y.
  std::vector<std::vector<int>> phi(m);
  std::vector<int> comp_of(n), local_of(n);
  for (int i = 0; i < m; ++i) {
    if (i == 0) {
      phi[0] = comps[0];
    } else {
      const auto iso = are_isomorphic(x, induced_subgraph(g, comps[i]));
      if (!iso) throw std::logic_error("regular_subgroup_search: components of a vertex-transitive graph differ");
      phi[i].resize(comps[i].size());
      for (std::size_t y = 0; y < iso->size(); ++y) phi[i][y] = comps[i][(*iso)[y]];
    }
    for (std::size_t y = 0; y < phi[i].size(); ++y) {
      comp_of[phi[i][y]] = i;
      local_of[phi[i][y]] = static_cast<int>(y);
    }
  }
  std::vector<Perm> out(n);
  for (int v = 0; v < n; ++v) {
    const int j = comp_of[v];
    const Perm& h = local[local_of[v]];
    Perm e(n);
    for (int u = 0; u < n; ++u) e[u] = phi[(comp_of[u] + j) % m][h[local_of[u]]];
    out[v] = std::move(e);
  }
  return out;
}

}  // namespace

bool verify_certificate(const Graph& g, const CayleyCertificate& cert) {
  if (!cert.group || !cert.connection_set) return false;
  const int n = g.order();
  if (cert.group->order() != n || static_cast<int>(cert.isomorphism.size()) != n) return false;
  if (!is_permutation(cert.isomorphism)) return false;
  const Graph cay = cayley_graph(*cert.group, *cert.connection_set);
  if (cay.size() != g.size()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (!cay.adjacent(cert.isomorphism[u], cert.isomorphism[v])) return false;
  }
  return true;
}

CayleyCertificate certificate_from_regular_group(const Graph& g, const std::vector<Perm>& elements) {
  const int n = g.order();
  if (static_cast<int>(elements.size()) != n) throw std::invalid_argument("certificate: need one element per vertex");
  // Element u is the automorphism r_u with r_u(0) = u; r_u r_w sends 0 to r_u(w).
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    if (elements[u][0] != u) throw std::invalid_argument("certificate: element does not send 0 to its vertex");
    for (int w = 0; w < n; ++w) table[static_cast<std::size_t>(u) * n + w] = elements[u][w];
  }
  // Greedy generating set: add the first element outside the current closure.
  std::vector<FiniteGroup::Generator> gens;
  std::vector<char> in_closure(n, 0);
  in_closure[0] = 1;
  for (int u = 1; u < n; ++u) {
    if (in_closure[u]) continue;
    gens.push_back({"g" + std::to_string(u), u});
    std::fill(in_closure.begin(), in_closure.end(), 0);
    in_closure[0] = 1;
    std::vector<int> members{0};
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (const auto& gen : gens) {
        const int x = table[static_cast<std::size_t>(members[head]) * n + gen.element];
        if (!in_closure[x]) {
          in_closure[x] = 1;
          members.push_back(x);
        }
      }
    }
  }
  auto group = std::make_shared<FiniteGroup>(n, std::move(table), std::move(gens), "regular subgroup of Aut");
  std::vector<int> s(g.neighbors(0).begin(), g.neighbors(0).end());
  auto conn = std::make_shared<ConnectionSet>(*group, s);
  Perm iso(n);
  for (int v = 0; v < n; ++v) iso[v] = group->inv(v);
  CayleyCertificate cert{group, conn, iso};
  if (!verify_certificate(g, cert)) throw std::logic_error("certificate: regular group does not yield an isomorphism");
  return cert;
}

RegularSubgroupResult regular_subgroup_search(const Graph& g, const PermutationGroup& aut,
                                              std::chrono::milliseconds budget) {
  RegularSubgroupResult result;
  const int n = g.order();
  if (aut.degree() != n) throw std::invalid_argument("regular_subgroup_search: group degree differs from graph order");
  if (n == 1) {
    result.status = SearchStatus::found;
    result.certificate = certificate_from_regular_group(g, {identity_perm(1)});
    return result;
  }
  if (aut.orbit(0).size() != static_cast<std::size_t>(n)) {
    result.shortcut = "automorphism group is not vertex-transitive";
    return result;
  }
  if (aut.order() % n != 0) throw std::logic_error("regular_subgroup_search: transitive group order not divisible by n");
  if (aut.first_base_point() != 0) throw std::invalid_argument("regular_subgroup_search: vertex 0 must be the first base point");
  const auto comps = components(g);
  if (comps[0].size() == 1) {
    // Edgeless: Z_n acts regularly.
    result.status = SearchStatus::found;
    result.certificate = certificate_from_regular_group(g, lift_to_components(g, comps, {identity_perm(1)}));
    return result;
  }
  const Graph x = comps.size() > 1 ? induced_subgraph(g, comps[0]) : Graph(0);
  const PermutationGroup x_aut = comps.size() > 1 ? automorphism_group(x, {0}) : aut;
  RegularSearch search(comps.size() > 1 ? x : g, x_aut, budget);
  try {
    auto slots = search.run();
    result.nodes = search.nodes();
    if (slots) {
      if (comps.size() > 1) slots = lift_to_components(g, comps, *slots);
      result.status = SearchStatus::found;
      result.certificate = certificate_from_regular_group(g, *slots);
    }
  } catch (const Timeout&) {
    result.nodes = search.nodes();
    result.status = SearchStatus::timeout;
  }
  return result;
}

}  // namespace drgcay
