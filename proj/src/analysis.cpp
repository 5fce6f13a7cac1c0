#include "drgcay/analysis.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "drgcay/field.hpp"
#include "drgcay/metrics.hpp"

namespace drgcay {

std::vector<std::int64_t> sylow_candidates(std::int64_t n, std::int64_t p) {
  if (n < 1 || !is_prime(p) || n % p != 0) throw std::invalid_argument("sylow_candidates: p must be a prime dividing n");
  std::int64_t m = n;
  while (m % p == 0) m /= p;
  std::vector<std::int64_t> out;
  for (auto d : divisors(m)) {
    if (d % p == 1 % p) out.push_back(d);
  }
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::unknown:
      break;
  }
  return "unknown";
}

AbelianVerdict all_groups_abelian(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("all_groups_abelian: n must be positive");
  if (n == 1) return {Verdict::yes, "trivial group"};
  const auto f = factorize(n);

  bool forced = true;
  std::string why;
  for (const auto& [p, e] : f) {
    const auto cand = sylow_candidates(n, p);
    forced = forced && e <= 2 && cand.size() == 1;
    why += (why.empty() ? "" : "; ") + std::string("n_") + std::to_string(p) + " = 1 forced, Sylow order " +
           std::to_string(e == 1 ? p : p * p);
  }
  if (forced) return {Verdict::yes, "every Sylow subgroup is normal and of order p or p^2: " + why};

  if (n % 2 == 0 && n >= 6) return {Verdict::no, "dihedral group of order " + std::to_string(n)};
  for (const auto& [p, e] : f) {
    if (e >= 3) {
      return {Verdict::no, "a nonabelian group of order " + std::to_string(p * p * p) + " times a cyclic group"};
    }
  }
  for (const auto& [p, ep] : f) {
    for (const auto& [q, eq] : f) {
      if (p != q && (q - 1) % p == 0) {
        return {Verdict::no, "Z" + std::to_string(q) + " x| Z" + std::to_string(p) + " exists since " +
                                 std::to_string(p) + " | " + std::to_string(q - 1)};
      }
    }
  }
  return {Verdict::unknown, "no decisive Sylow or witness pattern"};
}

namespace {

std::vector<std::vector<int>> partitions(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(left, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

}  // namespace

std::vector<AbelianGroup> abelian_groups(int n) {
  if (n < 1 || n > 2000) throw std::invalid_argument("abelian_groups: 1 <= n <= 2000 required");
  const auto f = factorize(n);
  // Elementary divisors per prime, from each choice of exponent partition.
  std::vector<std::vector<std::vector<int>>> per_prime;
  for (const auto& [p, e] : f) {
    std::vector<std::vector<int>> options;
    for (const auto& part : partitions(e)) {
      std::vector<int> powers;
      for (int x : part) {
        int v = 1;
        for (int i = 0; i < x; ++i) v *= static_cast<int>(p);
        powers.push_back(v);
      }
      options.push_back(powers);  // descending
    }
    per_prime.push_back(std::move(options));
  }
  std::vector<AbelianGroup> out;
  std::vector<std::size_t> choice(per_prime.size(), 0);
  while (true) {
    // Invariant factors: the i-th largest powers of each prime multiply into
    // the i-th largest factor.
    std::size_t len = 0;
    for (std::size_t i = 0; i < per_prime.size(); ++i) len = std::max(len, per_prime[i][choice[i]].size());
    std::vector<int> factors(len, 1);
    for (std::size_t i = 0; i < per_prime.size(); ++i) {
      const auto& powers = per_prime[i][choice[i]];
      for (std::size_t j = 0; j < powers.size(); ++j) factors[j] *= powers[j];
    }
    std::reverse(factors.begin(), factors.end());  // d_1 | d_2 | ...
    AbelianGroup ag{factors, "", cyclic_group(1)};
    if (factors.empty()) {
      ag.name = "Z1";
    } else {
      FiniteGroup g = cyclic_group(factors[0]);
      ag.name = "Z" + std::to_string(factors[0]);
      for (std::size_t j = 1; j < factors.size(); ++j) {
        g = direct_product(g, cyclic_group(factors[j]));
        ag.name += "xZ" + std::to_string(factors[j]);
      }
      ag.group = std::move(g);
    }
    out.push_back(std::move(ag));
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == per_prime[i].size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  std::sort(out.begin(), out.end(),
            [](const AbelianGroup& a, const AbelianGroup& b) { return a.invariant_factors.size() < b.invariant_factors.size() ||
                                                                     (a.invariant_factors.size() == b.invariant_factors.size() &&
                                                                      a.invariant_factors > b.invariant_factors); });
  return out;
}

OrderAnalysis order_analysis(int n) {
  OrderAnalysis a;
  a.n = n;
  a.factorization = factorize(n);
  for (const auto& [p, e] : a.factorization) a.sylow.emplace_back(p, sylow_candidates(n, p));
  a.all_abelian = all_groups_abelian(n);
  if (n <= 2000) {
    for (const auto& g : abelian_groups(n)) a.abelian_names.push_back(g.name);
  }
  return a;
}

ObstructionReport line_graph_abelian_obstruction(const Graph& root) {
  const int v = root.order();
  if (v == 2 && root.size() == 1) throw std::invalid_argument("abelian obstruction: K2 is an exceptional root");
  if (v == 4 && root.size() == 6) throw std::invalid_argument("abelian obstruction: K4 is an exceptional root");
  if (root.size() == 0 || !is_connected(root)) throw std::invalid_argument("abelian obstruction: root must be connected with an edge");
  const auto k = regular_degree(root);
  if (!k) throw std::invalid_argument("abelian obstruction: root must be regular");

  ObstructionReport r;
  r.vertices = v;
  r.edges = root.size();
  const int m = r.edges;
  const auto ab = all_groups_abelian(m);
  if (ab.verdict != Verdict::yes) {
    r.steps.push_back("not every group of order " + std::to_string(m) + " is known to be abelian (" + ab.reason + ")");
    r.conclusion = "inapplicable";
    return r;
  }
  if (is_bipartite(root)) {
    r.steps.push_back("the root is bipartite, so an edge-transitive group need not be vertex-transitive");
    r.conclusion = "inapplicable";
    return r;
  }
  if (v == m) {
    r.steps.push_back("the root has as many vertices as edges, so a regular action is not excluded");
    r.conclusion = "inapplicable";
    return r;
  }
  r.applicable = true;
  const std::string ms = std::to_string(m), vs = std::to_string(v);
  r.steps = {
      "suppose L(root) is a Cayley graph; then Aut(L(root)) has a regular subgroup G of order " + ms,
      "the root is connected and not K2 or K4, so Aut(L(root)) = Aut(root) and G acts on the root regularly on its " +
          ms + " edges",
      "the root is connected and not bipartite, so an edge-transitive group is vertex-transitive on the root",
      "every group of order " + ms + " is abelian (" + ab.reason + ")",
      "a transitive abelian permutation group acts regularly, so " + ms + " = |G| = |V(root)| = " + vs,
      "but the root has " + vs + " vertices, a contradiction",
  };
  r.conclusion = "L(root) is not a Cayley graph";
  return r;
}

GenerationScan hk_generation_scan(int n, int k) {
  if (all_groups_abelian(n).verdict != Verdict::yes) {
    throw std::invalid_argument("hk_generation_scan: requires every group of order n to be abelian");
  }
  if (k < 1 || n % k != 0) throw std::invalid_argument("hk_generation_scan: k must divide n");
  GenerationScan scan;
  scan.n = n;
  scan.k = k;
  for (const auto& ag : abelian_groups(n)) {
    ++scan.groups_checked;
    const auto subs = subgroups_of_order(ag.group, k);
    if (!subs.complete) throw std::logic_error("hk_generation_scan: subgroup enumeration incomplete");
    const auto& list = subs.subgroups;
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        std::vector<int> meet;
        std::set_intersection(list[i].begin(), list[i].end(), list[j].begin(), list[j].end(), std::back_inserter(meet));
        if (meet.size() != 1) continue;
        ++scan.pairs_checked;
        std::vector<int> seed(list[i].begin(), list[i].end());
        seed.insert(seed.end(), list[j].begin(), list[j].end());
        if (static_cast<int>(subgroup_closure(ag.group, seed).size()) == n) {
          scan.witnesses.push_back({ag.name, list[i], list[j]});
        }
      }
    }
  }
  return scan;
}

}  // namespace drgcay
