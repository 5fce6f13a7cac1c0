#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "drgcay/graph.hpp"
#include "drgcay/group.hpp"

namespace drgcay {

// Divisors d of n / p^a (p^a the full power of p in n) with d ≡ 1 (mod p).
// Throws std::invalid_argument unless p is a prime dividing n.
std::vector<std::int64_t> sylow_candidates(std::int64_t n, std::int64_t p);

enum class Verdict { yes, no, unknown };
const char* to_string(Verdict v);

struct AbelianVerdict {
  Verdict verdict = Verdict::unknown;
  std::string reason;
};

// yes: every Sylow subgroup is normal (n_p forced to 1) and of order p or p^2,
// so every group of order n is a direct product of abelian groups.
// no: a nonabelian group of order n is known to exist.
// unknown otherwise.
AbelianVerdict all_groups_abelian(std::int64_t n);

struct AbelianGroup {
  std::vector<int> invariant_factors;  // d_1 | d_2 | ... , each > 1
  std::string name;                    // e.g. "Z3xZ15"; "Z1" for the trivial group
  FiniteGroup group;
};

// One group per isomorphism class; throws std::invalid_argument for n > 2000.
std::vector<AbelianGroup> abelian_groups(int n);

struct OrderAnalysis {
  std::int64_t n = 0;
  std::vector<std::pair<std::int64_t, int>> factorization;
  // (p, candidate list for n_p)
  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> sylow;
  AbelianVerdict all_abelian;
  std::vector<std::string> abelian_names;
};

OrderAnalysis order_analysis(int n);

struct ObstructionReport {
  bool applicable = false;
  int edges = 0;
  int vertices = 0;
  // Ordered inference steps; for an inapplicable report, the failed premise.
  std::vector<std::string> steps;
  std::string conclusion;
};

// For a connected regular root with m edges: if every group of order m is
// abelian, the root is not bipartite, and it does not have m vertices, then
// L(root) is not a Cayley graph. Throws std::invalid_argument for K2, K4,
// disconnected or irregular roots.
ObstructionReport line_graph_abelian_obstruction(const Graph& root);

struct GenerationWitness {
  std::string group;
  Subgroup h, k;
};

struct GenerationScan {
  int n = 0, k = 0;
  int groups_checked = 0;
  int pairs_checked = 0;
  std::vector<GenerationWitness> witnesses;
  bool impossible() const { return witnesses.empty(); }
};

// Over every group of order n (all abelian, so abelian_groups is complete)
// and every pair of distinct order-k subgroups meeting in {e}: does
// (H ∪ K) \ {e} generate G? Throws std::invalid_argument unless
// all_groups_abelian(n) is yes and k divides n.
GenerationScan hk_generation_scan(int n, int k);

}  // namespace drgcay
